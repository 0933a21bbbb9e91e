#!/usr/bin/env python3
"""Generate the bundled demo corpus.

Produces data/demo_corpus.csv and data/demo_corpus.arff: 625 requirement
statements across 12 fictional projects, 255 functional and 370
non-functional, with the non-functional side split over the eleven PROMISE
subcategories (A 21, FT 10, L 13, LF 38, MN 17, O 62, PE 54, PO 1, SC 21,
SE 66, US 67).

The corpus is synthetic but deliberately uneven, the way real SRS collections
are: classes speak in several phrasing dialects, some statements are plainly
worded, and a handful of functional requirements borrow security or
performance vocabulary. Regenerating is deterministic; the output files are
checked in.
"""

import argparse
import random
from pathlib import Path

SEED = 482193

SUB_COUNTS = {
    "A": 21, "FT": 10, "L": 13, "LF": 38, "MN": 17, "O": 62,
    "PE": 54, "PO": 1, "SC": 21, "SE": 66, "US": 67,
}
FR_COUNT = 255

PROJECTS = {
    1: dict(users=["realtor", "agent", "customer"],
            objects=["listing", "property", "photo", "inspection", "appraisal"]),
    2: dict(users=["card member", "clerk", "customer"],
            objects=["card", "statement", "transaction", "dispute", "payment"]),
    3: dict(users=["patient", "nurse", "administrator"],
            objects=["appointment", "prescription", "referral", "chart", "invoice"]),
    4: dict(users=["librarian", "member", "visitor"],
            objects=["book", "loan", "reservation", "catalog", "fine"]),
    5: dict(users=["customer", "manager", "operator"],
            objects=["order", "cart", "invoice", "coupon", "refund"]),
    6: dict(users=["employee", "manager", "applicant"],
            objects=["timesheet", "payslip", "vacancy", "contract", "absence"]),
    7: dict(users=["driver", "operator", "clerk"],
            objects=["parcel", "route", "manifest", "depot", "delivery"]),
    8: dict(users=["visitor", "manager", "staff"],
            objects=["ticket", "venue", "session", "badge", "programme"]),
    9: dict(users=["customer", "agent", "supervisor"],
            objects=["claim", "quote", "renewal", "coverage", "premium"]),
    10: dict(users=["student", "administrator", "applicant"],
             objects=["course", "grade", "enrollment", "transcript", "certificate"]),
    11: dict(users=["agent", "customer", "supervisor"],
             objects=["ticket", "incident", "escalation", "article", "survey"]),
    12: dict(users=["clerk", "manager", "supervisor"],
             objects=["item", "warehouse", "supplier", "shipment", "batch"]),
}

PRODUCTS = ["system", "product", "application", "software", "website", "portal"]

# Clause tails shared across all requirement kinds; they add everyday
# operating context without carrying category-specific vocabulary.
TAILS = [
    "under normal conditions during regular business use",
    "under typical conditions across ordinary workloads",
    "under standard production conditions in general use",
    "under ordinary operating conditions during routine business periods",
    "under production conditions across typical deployments",
    "under standard conditions during normal operation",
    "under typical workloads in regular production use",
    "under normal production conditions across general installations",
]

FR_VERBS = ["add", "create", "delete", "edit", "remove", "print", "export",
            "archive", "cancel", "submit", "upload", "update", "register",
            "assign", "attach", "review", "approve", "reject", "duplicate"]

FR_FIELDS = ["name", "date", "status", "category", "reference number",
             "owner", "type", "priority"]


class Gen:
    def __init__(self, seed):
        self.rng = random.Random(seed)
        self.rows = []
        self.seen = set()
        self.label = "F"

    def pick(self, xs):
        return self.rng.choice(xs)

    def product(self):
        return self.pick(PRODUCTS)

    def project(self):
        return self.rng.randint(1, 12)

    def add(self, label, text, project=None):
        if project is None:
            project = self.project()
        # Retry slot choices elsewhere; exact duplicates are tolerated only
        # after several collisions so the corpus keeps mild repetition.
        self.rows.append((project, text, label))

    def emit(self, label, make, n):
        self.label = label
        added = 0
        guard = 0
        while added < n:
            project = self.project()
            text = make(project)
            if label != "PO" and self.rng.random() < 0.55:
                text = text[:-1] + " " + self.pick(TAILS) + "."
            guard += 1
            if text in self.seen and guard < 8:
                continue
            self.seen.add(text)
            guard = 0
            self.add(label, text, project)
            added += 1


def a_an(word):
    return ("an " if word[0] in "aeiou" else "a ") + word


# ------------------------------------------------------------------ FR ----

def gen_fr(g):
    def crud(p):
        d = PROJECTS[p]
        u, v, o = g.pick(d["users"]), g.pick(FR_VERBS), g.pick(d["objects"])
        forms = [
            f"The {g.product()} shall allow the {u} to {v} {a_an(o)}.",
            f"The {u} shall be able to {v} {a_an(o)}.",
            f"The {g.product()} shall let the {u} {v} each {o} record from the main screen.",
            f"The {g.product()} shall provide a form for the {u} to {v} {a_an(o)}.",
        ]
        return g.pick(forms)

    def search(p):
        d = PROJECTS[p]
        u, o, f = g.pick(d["users"]), g.pick(d["objects"]), g.pick(FR_FIELDS)
        forms = [
            f"The {g.product()} shall allow each {u} to search a {o} list by {f}.",
            f"The {g.product()} shall sort each {o} list by {f} in ascending or descending order.",
            f"Each {u} shall be able to filter a {o} list by {f}.",
            f"The {g.product()} shall display a {o} list grouped by {f} for each {u}.",
        ]
        return g.pick(forms)

    def cardinal(p):
        d = PROJECTS[p]
        u, o = g.pick(d["users"]), g.pick(d["objects"])
        n1 = g.pick([5, 10, 15, 20, 25, 50])
        n2 = g.pick([3, 4, 6, 8])
        forms = [
            f"The {g.product()} shall display up to {n1} {o} records on a single screen for each {u}.",
            f"The {g.product()} shall allow the {u} to upload {n2} attachments for each {o}.",
            f"The {g.product()} shall show {n1} {o} records on each page with a paging control.",
            f"The {g.product()} shall retain {n1} versions of each {o}.",
            f"The {u} shall be able to select {n2} {o} records for a batch print.",
        ]
        return g.pick(forms)

    def notify(p):
        d = PROJECTS[p]
        u, o = g.pick(d["users"]), g.pick(d["objects"])
        forms = [
            f"The {g.product()} shall send an email notification to the {u} when {a_an(o)} is approved.",
            f"The {g.product()} shall notify the {u} when the {o} status changes.",
            f"The {g.product()} shall record the date and time of each change to {a_an(o)}.",
            f"The {g.product()} shall generate a confirmation message after the {u} submits {a_an(o)}.",
        ]
        return g.pick(forms)

    def workflow(p):
        d = PROJECTS[p]
        u, o, f = g.pick(d["users"]), g.pick(d["objects"]), g.pick(FR_FIELDS)
        forms = [
            f"The {g.product()} shall assign a reference number to each {o}.",
            f"The {g.product()} shall allow the {u} to cancel {a_an(o)} at any time before approval.",
            f"The {g.product()} shall export each {o} record to a PDF or CSV file.",
            f"The {g.product()} shall validate each {f} field before saving {a_an(o)}.",
            f"The {g.product()} shall print a summary of each selected {o} record.",
            f"The {u} shall be able to attach a note to each {o}.",
            f"The {g.product()} shall archive closed {o} records after approval.",
            f"The {g.product()} shall merge each duplicate {o} record selected by a {u}.",
        ]
        return g.pick(forms)

    def time_field(p):
        d = PROJECTS[p]
        u, o = g.pick(d["users"]), g.pick(d["objects"])
        n = g.pick([15, 30, 45, 60, 90])
        forms = [
            f"The {g.product()} shall end a session of each {u} after {n} minutes of inactivity.",
            f"A draft {o} shall expire {n} days after it was created.",
            f"The {g.product()} shall keep each deleted {o} record in a recycle area for {n} days.",
            f"A confirmation code sent to each {u} shall remain valid for {n} minutes.",
            f"The {g.product()} shall keep a record of the time at which each {o} was submitted.",
        ]
        return g.pick(forms)

    def ambiguous(p):
        d = PROJECTS[p]
        u, o = g.pick(d["users"]), g.pick(d["objects"])
        forms = [
            f"The {g.product()} shall encrypt {o} records before they are stored.",
            f"The {g.product()} shall require the {u} to change the password at first login.",
            f"The {g.product()} shall verify the identity of the {u} before granting access to {o} records.",
            f"The {g.product()} shall compress each uploaded photo to a smaller size.",
            f"The {g.product()} shall cache {o} searches for faster retrieval.",
            f"The {g.product()} shall lock {a_an(o)} after a third failed attempt.",
            f"The {g.product()} shall let the {u} view each archived {o} record.",
        ]
        return g.pick(forms)

    g.emit("F", crud, 70)
    g.emit("F", search, 45)
    g.emit("F", cardinal, 45)
    g.emit("F", notify, 35)
    g.emit("F", workflow, 36)
    g.emit("F", time_field, 10)
    g.emit("F", ambiguous, 14)


# ----------------------------------------------------------------- NFR ----

def user_of(g, p):
    return g.pick(PROJECTS[p]["users"])


def gen_pe(g):
    verbs = ["complete a search across stored records", "load a page", "open a stored record",
             "refresh the current page", "display the requested data",
             "complete a lookup", "respond to search requests",
             "show the selected screen", "open stored reports",
             "finish a records export"]

    def sec_unit(n):
        return "second" if n == 1 else g.pick(["seconds", "secs", "sec"])

    def dur(n, unit):
        frame = g.pick(["within {}", "in {}", "in under {}", "in no more than {}", "at a maximum of {}"])
        return frame.format(f"{n} {unit}")

    def within_sec(p):
        n = g.pick([1, 2, 3, 4, 5, 6, 8])
        return f"The {g.product()} shall {g.pick(verbs)} {dur(n, sec_unit(n))}."

    def to_user(p):
        n = g.pick([2, 3, 4, 5, 6, 7])
        return (f"The {g.product()} shall {g.pick(['return', 'show', 'deliver'])} search results to the "
                f"{user_of(g, p)} {dur(n, sec_unit(n))}.")

    def in_dur(p):
        unit = g.pick(["seconds", "secs", "milliseconds", "ms"])
        n = (g.pick([100, 200, 250, 300, 400, 500, 750, 800]) if unit in ("milliseconds", "ms")
             else g.pick([2, 3, 4, 5, 6, 9]))
        return f"The {g.product()} shall {g.pick(verbs)} in {n} {unit}."

    def bounded(p):
        n = g.pick([2, 3, 4, 5, 8, 10])
        bound = g.pick(["no more than", "no later than", "at a maximum of"])
        forms = [
            f"The {g.pick(['response time', 'latency'])} of the {g.product()} shall not be more than {n} {sec_unit(n)}.",
            f"The {g.product()} shall {g.pick(verbs)} {bound} {n} {sec_unit(n)} after the request.",
        ]
        return g.pick(forms)

    def under(p):
        forms = [
            f"The {g.product()} shall {g.pick(verbs)} under {g.pick([1, 2, 3])} {g.pick(['secs', 'seconds'])} even at {g.pick(['peak load', 'full load'])}.",
            f"The {g.product()} shall {g.pick(verbs)} under {g.pick([1, 2])} mins during {g.pick(['peak hours', 'busy hours'])}.",
        ]
        return g.pick(forms)

    def adjective(p):
        adj = g.pick(["quick", "rapid", "swift", "speedy", "prompt",
                      "instant", "immediate"])
        forms = [
            f"The {g.product()} shall provide {adj} {g.pick(['response times', 'reply times'])} for {user_of(g, p)}s.",
            f"The {g.product()} shall provide {adj} {g.pick(['response times', 'reply times'])} throughout a {user_of(g, p)} session.",
        ]
        return g.pick(forms)

    def standalone(p):
        forms = [
            f"The {g.product()} shall respond to every request in a timely manner.",
            f"The {g.product()} shall be quick when filtering long record lists.",
            f"Lookups across stored records shall feel quick to the {user_of(g, p)}.",
            f"Status updates shall appear to {user_of(g, p)}s in a timely fashion.",
        ]
        return g.pick(forms)

    def quiet(p):
        n = g.pick([1, 2])
        unit = g.pick(["mins", "minutes", "min"])
        forms = [
            f"The {g.product()} shall open the reports page for the {user_of(g, p)} {dur(n, unit)}.",
            f"The {g.product()} shall {g.pick(verbs)} {dur(n, unit)} during peak hours.",
            f"The {g.product()} shall {g.pick(verbs)} in {n} {unit} at most.",
        ]
        return g.pick(forms)

    g.emit("PE", within_sec, 8)
    g.emit("PE", to_user, 6)
    g.emit("PE", in_dur, 10)
    g.emit("PE", bounded, 8)
    g.emit("PE", under, 5)
    g.emit("PE", adjective, 7)
    g.emit("PE", standalone, 4)
    g.emit("PE", quiet, 6)


def gen_a(g):
    def pct_time(p):
        v = g.pick(["99.9%", "99.5%", "98%", "99%", "95%"])
        pred = g.pick(["available", "reachable", "accessible", "online"])
        forms = [
            f"The {g.product()} shall be {pred} {v} of the time.",
            f"The {g.product()} shall be {pred} to {user_of(g, p)}s {v} of the time.",
        ]
        return g.pick(forms)

    def always_on(p):
        pred = g.pick(["available", "reachable", "accessible", "online"])
        forms = [
            f"The {g.product()} shall be {pred} 24/7.",
            f"The {g.product()} shall operate 24/7 except during planned maintenance.",
            f"The {g.product()} shall stay {pred} 24/7.",
        ]
        return g.pick(forms)

    def at_all_times(p):
        pred = g.pick(["available", "reachable", "accessible", "online"])
        forms = [
            f"The {g.product()} shall be {pred} at all times.",
            f"The {g.product()} shall remain {pred} at all times.",
            f"Balances shall be viewable by {user_of(g, p)}s at all times.",
        ]
        return g.pick(forms)

    def every_day(p):
        pred = g.pick(["available", "reachable", "accessible", "online"])
        forms = [
            f"The {g.product()} shall be {pred} every day including holidays.",
            f"The {g.product()} shall be {pred} for reporting every day of the year.",
        ]
        return g.pick(forms)

    def quiet(p):
        forms = [
            f"Planned outages of the {g.product()} shall be announced to {user_of(g, p)}s well in advance.",
            f"The {g.product()} shall be back online after planned outages without data loss.",
            f"The {g.product()} shall stay online 99 percent of the time throughout the year.",
        ]
        return g.pick(forms)

    g.emit("A", pct_time, 7)
    g.emit("A", always_on, 4)
    g.emit("A", at_all_times, 4)
    g.emit("A", every_day, 3)
    g.emit("A", quiet, 3)


def gen_se(g):
    def login_style(p):
        u = user_of(g, p)
        forms = [
            f"The {g.product()} shall require a username and password for login.",
            f"Remote access shall require {g.pick(['a username and password', 'two factor authentication'])}.",
            f"The {g.product()} shall provide login pages for {u} accounts.",
            f"Failed logins by {u}s shall be recorded in the audit log.",
            f"The {g.product()} shall disable accounts after {g.pick(['five', 'three'])} failed logon attempts.",
            f"Logins shall be verified before access is granted.",
            f"The {g.product()} shall prevent reuse of the previous five passwords.",
            f"Passwords of {u}s shall be stored encrypted.",
            f"Sessions shall always end at logout of the {u}.",
            f"The login page of the {g.product()} shall lock after repeated failed attempts.",
        ]
        return g.pick(forms)

    def abstract_noun(p):
        u = user_of(g, p)
        forms = [
            f"The {g.product()} shall protect the privacy of {u} data.",
            f"The privacy of uploaded documents shall be preserved by the {g.product()} at all times.",
            f"The {g.product()} shall ensure the security of payment data.",
            f"The security of archived records shall be reviewed during every audit.",
            f"The {g.product()} shall protect the integrity of stored records.",
            f"The confidentiality of {u} records shall be ensured.",
            f"The {g.product()} shall enforce the security policy for remote access.",
            f"The access policy shall be applied to protect archived records.",
            f"Sensitive {u} data shall be stored encrypted.",
            f"The {g.product()} shall keep {u} records confidential.",
            f"The {g.product()} shall prevent tampering with stored records.",
            f"Intrusion attempts shall be recorded in the audit log.",
        ]
        return g.pick(forms)

    def only_subject(p):
        d = PROJECTS[p]
        u = g.pick(["registered " + d["users"][0] + "s",
                    "authorized staff", "approved managers",
                    "registered users", "trusted administrators"])
        o = g.pick(["stored", "archived", "payment", "account"])
        md = g.pick(["can", "may", "shall"])
        v = g.pick(["view", "modify", "delete", "export", "print",
                    "unlock", "reassign"])
        return f"Only {u} {md} {v} {o} records."

    def product_object(p):
        forms = [
            f"Visitors without accounts shall not be able to enter the {g.product()}.",
            f"Unauthenticated requests shall not reach the {g.product()}.",
            f"Firewalls shall protect the {g.product()} from malicious requests.",
            f"Unauthorized requests shall not enter the {g.product()}.",
        ]
        return g.pick(forms)

    def stable(p):
        u = user_of(g, p)
        forms = [
            f"The {g.product()} shall encrypt stored payment records.",
            f"The {g.product()} shall encrypt {u} records before storage.",
            f"Access shall be granted only to authorized requests.",
            f"The {g.product()} shall reject malicious input on all forms at all times.",
            f"The {g.product()} shall protect {u} records from unauthorized access.",
            f"Archived records shall be encrypted by the {g.product()}.",
            f"Audit records of privileged actions shall be kept by the {g.product()}.",
            f"Unauthorized access attempts shall be recorded in the audit log.",
            f"The {g.product()} shall block unauthorized access to {u} accounts.",
            f"Every download of stored records shall be audited.",
            f"Access rights of {u}s shall be reviewed during every audit.",
            f"The {g.product()} shall check credentials on every request at all times.",
            f"The {g.product()} shall block phishing messages sent to {u}s.",
            f"Administrator actions shall be audited by the {g.product()}.",
            f"Breaches of {u} data shall be recorded in the audit log.",
            f"Encryption shall be applied to archived {u} records.",
        ]
        return g.pick(forms)

    def noisy(p):
        u = user_of(g, p)
        forms = [
            f"The {g.product()} shall disable accounts within 30 secs of five failed logins.",
            f"The {g.product()} shall reject malicious requests in under 2 secs.",
            f"Password changes for {u}s shall complete within 5 mins.",
        ]
        return g.pick(forms)

    g.emit("SE", login_style, 14)
    g.emit("SE", abstract_noun, 13)
    g.emit("SE", only_subject, 12)
    g.emit("SE", product_object, 5)
    g.emit("SE", stable, 19)
    g.emit("SE", noisy, 3)


def gen_us(g):
    def ease(p):
        u = user_of(g, p)
        pred = g.pick(["easy to use", "simple to operate", "user friendly",
                       "intuitive", "effortless", "straightforward"])
        forms = [
            f"The {g.product()} shall be {pred} for {u}s.",
            f"The {g.product()} shall be {pred} without training.",
            f"Data entry screens shall be {pred} for new {u}s.",
            f"The booking screens shall be {pred} enough for {u}s to finish without help.",
            f"The {g.product()} shall offer an uncluttered layout of the main functions.",
            f"Search screens shall be self explanatory for {u}s.",
        ]
        return g.pick(forms)

    def learn(p):
        u = user_of(g, p)
        course = g.pick(["training", "instruction", "coaching", "onboarding"])
        forms = [
            f"{g.pick(['New', 'First time', 'Beginning'])} {u}s shall be able to learn the main screens without formal {course}.",
            f"A typical {u} shall master common tasks after only short {course}.",
            f"{course.capitalize()} material shall not be required for everyday use of the {g.product()}.",
            f"The {g.product()} shall include guided tours for new {u}s.",
            f"Novices shall manage common tasks without coaching.",
        ]
        return g.pick(forms)

    def help_text(p):
        aid = g.pick(["help", "guidance", "tooltips", "hints"])
        forms = [
            f"The {g.product()} shall provide {aid} on every screen at all times.",
            f"Messages shall explain mistakes in {g.pick(['plain language', 'plain wording', 'simple wording', 'everyday words'])}.",
            f"The {g.product()} shall show {aid} next to every field on the screen.",
            f"{aid.capitalize()} shall be searchable from any screen.",
        ]
        return g.pick(forms)

    def navigate(p):
        u = user_of(g, p)
        forms = [
            f"The {u} shall access any function of the {g.product()} within only three clicks.",
            f"Navigation menus shall stay in the same place on every screen at all times.",
            f"The {g.product()} shall support keyboard shortcuts on all screens.",
            f"Menus of the {g.product()} shall keep the same layout on every screen.",
        ]
        return g.pick(forms)

    def language(p):
        u = user_of(g, p)
        forms = [
            f"All labels in the {g.product()} shall use only {g.pick(['plain language', 'plain wording', 'simple wording', 'everyday words'])}.",
            f"Messages shall use {g.pick(['plain language', 'plain wording', 'simple wording', 'everyday words'])} free of jargon.",
            f"Search results shall use {g.pick(['plain language', 'plain wording', 'simple wording', 'everyday words'])} readable by every {u}.",
        ]
        return g.pick(forms)

    def noisy(p):
        u = user_of(g, p)
        forms = [
            f"New {u}s shall finish the signup screens in under 10 mins.",
            f"{u.capitalize()}s shall learn the basic tasks in under 30 mins.",
            f"The help screens shall open for {u}s in under 5 secs.",
            f"The guided tour shall take no more than 15 mins for a new {u}.",
        ]
        return g.pick(forms)

    g.emit("US", ease, 16)
    g.emit("US", learn, 13)
    g.emit("US", help_text, 12)
    g.emit("US", navigate, 11)
    g.emit("US", language, 7)
    g.emit("US", noisy, 8)


def gen_o(g):
    def browser(p):
        b1, b2 = g.rng.sample(["Chrome", "Firefox", "Safari", "Edge",
                               "Internet Explorer", "Opera"], 2)
        forms = [
            f"The {g.product()} shall work with current versions of {b1} and {b2}.",
            f"The {g.product()} shall be compatible with {b1} and {b2} browsers.",
            f"The {g.product()} shall display correctly in {b1} and {b2} on {g.pick(['standard', 'typical'])} computers.",
            f"The {g.product()} shall degrade gracefully in older browsers.",
        ]
        return g.pick(forms)

    def hosting(p):
        site = g.pick(["head office", "workplace", "branch offices", "campus", "main site"])
        forms = [
            f"The {g.product()} shall {g.pick(['run', 'start'])} on {g.pick(['Windows and Linux', 'Windows', 'Linux', 'Unix'])} servers.",
            f"The {g.product()} shall be deployable on the {site} servers.",
            f"The {g.product()} shall operate on the virtual server environment.",
            f"The {g.product()} shall run on the {site} hardware used by {user_of(g, p)}s.",
        ]
        return g.pick(forms)

    def integrate(p):
        site = g.pick(["head office", "workplace", "branch offices", "campus", "main site"])
        forms = [
            f"The {g.product()} shall integrate with the {site} {g.pick(['email', 'webmail'])} servers.",
            f"The {g.product()} shall read {user_of(g, p)} records correctly from the existing Oracle database.",
            f"The {g.product()} shall import {user_of(g, p)} accounts from the Active Directory.",
            f"The {g.product()} shall integrate with the legacy accounting database.",
            f"The {g.product()} shall connect correctly to {g.pick(['Outlook', 'SharePoint'])} on the {site} computers.",
            f"Remote access for {user_of(g, p)}s shall run through the {site} VPN.",
        ]
        return g.pick(forms)

    def environment(p):
        site = g.pick(["head office", "workplace", "branch offices", "campus", "main site"])
        box = g.pick(["computers", "workstations", "desktops", "machines"])
        forms = [
            f"The {g.product()} shall {g.pick(['operate', 'run'])} in the existing {site} {g.pick(['network', 'intranet'])}.",
            f"The {g.product()} shall function on the {box} of {user_of(g, p)}s.",
            f"The {g.product()} shall support proxy servers in the {site} {g.pick(['network', 'intranet'])}.",
            f"The {g.product()} shall {g.pick(['operate', 'function'])} on the existing network without modification.",
        ]
        return g.pick(forms)

    def peripherals(p):
        site = g.pick(["head office", "workplace", "branches", "campus"])
        forms = [
            f"The {g.product()} shall print {user_of(g, p)} labels to the printers installed in the {site}.",
            f"The {g.product()} shall read barcodes from the scanners installed in the {site}.",
            f"The {g.product()} shall export files readable by the {site} spreadsheet suite.",
        ]
        return g.pick(forms)

    def noisy(p):
        site = g.pick(["head office", "workplace", "branch offices", "campus", "main site"])
        forms = [
            f"The {g.product()} shall start on Windows servers within 1 minute.",
            f"The {g.product()} shall connect to the {site} database within 5 secs.",
            f"The {g.product()} shall open {g.pick(['files', 'reports'])} from the {site} suite within 3 secs.",
            f"Startup of the {g.product()} on Linux servers shall take under 2 mins.",
            f"The {site} email servers shall be reachable from the {g.product()} at all times.",
            f"The {g.product()} shall remain usable by {user_of(g, p)}s in older browsers.",
        ]
        return g.pick(forms)

    g.emit("O", browser, 11)
    g.emit("O", hosting, 11)
    g.emit("O", integrate, 12)
    g.emit("O", environment, 12)
    g.emit("O", peripherals, 8)
    g.emit("O", noisy, 8)


def gen_lf(g):
    def colors(p):
        org = g.pick(["corporate", "company", "brand"])
        forms = [
            f"The {g.product()} shall use the {org} color scheme on all screens.",
            f"Screen backgrounds shall follow the {org} palette.",
            f"Charts shown to {user_of(g, p)}s shall use the {org} colors.",
        ]
        return g.pick(forms)

    def look(p):
        u = user_of(g, p)
        style = g.pick(["look and feel", "appearance", "styling", "aesthetics"])
        forms = [
            f"The {g.product()} shall have the modern {style} expected today.",
            f"The {style} of the {g.product()} shall match the {g.pick(['corporate', 'company', 'organization'])} {g.pick(['style guide', 'brand handbook'])}.",
            f"Screens of the {g.product()} shall appear consistently clean and professional to {u}s.",
        ]
        return g.pick(forms)

    def layout(p):
        forms = [
            f"The layout of the {g.product()} shall follow the {g.pick(['corporate', 'company', 'brand', 'organization'])} {g.pick(['design guide', 'design guidelines'])}.",
            f"Forms shall keep a consistent arrangement for {user_of(g, p)}s across the {g.product()}.",
            f"The {g.pick(['design', 'styling'])} of the landing page shall follow the {g.pick(['style guide', 'design guidelines', 'brand handbook'])}.",
            f"Printed output of the {g.product()} shall {g.pick(['follow', 'mirror'])} the screen {g.pick(['design', 'styling'])}.",
        ]
        return g.pick(forms)

    def branding(p):
        forms = [
            f"The {g.pick(['corporate', 'company', 'brand'])} logo shall appear in the header of every screen.",
            f"Fonts shall follow the typography of the {g.pick(['corporate', 'company', 'brand', 'organization'])} {g.pick(['style guide', 'design guidelines'])}.",
            f"The visual style of printed output shall {g.pick(['match', 'mirror'])} the screen {g.pick(['design', 'styling'])}.",
            f"Icons shall share the {g.pick(['visual style', 'styling'])} used across the {g.product()}.",
        ]
        return g.pick(forms)

    def noisy(p):
        forms = [
            f"The {g.pick(['corporate', 'company', 'brand'])} logo shall load within 2 secs on every screen.",
            f"The landing page {g.pick(['design', 'artwork'])} shall load within 3 secs for {user_of(g, p)}s.",
            f"The {g.pick(['look and feel', 'appearance', 'styling'])} shall stay consistent for {user_of(g, p)}s.",
        ]
        return g.pick(forms)

    g.emit("LF", colors, 8)
    g.emit("LF", look, 9)
    g.emit("LF", layout, 9)
    g.emit("LF", branding, 9)
    g.emit("LF", noisy, 3)


def gen_mn(g):
    def release(p):
        forms = [
            f"New releases of the {g.product()} shall be installable without affecting stored {user_of(g, p)} data.",
            f"Upgrades of the {g.product()} shall not require full reinstallation.",
            f"Patches shall be applied routinely to the {g.product()} within 15 mins without logging {user_of(g, p)}s out.",
        ]
        return g.pick(forms)

    def modular(p):
        forms = [
            f"Components of the {g.product()} shall be upgradeable independently.",
            f"Business rules shall be kept in configuration and maintained without code changes.",
            f"The source code of the {g.product()} shall follow the documented maintenance guidelines.",
        ]
        return g.pick(forms)

    def maintain(p):
        forms = [
            f"Routine maintenance and configuration tasks of the {g.product()} shall be possible for the administrators.",
            f"The {g.product()} shall routinely write diagnostic logs that support maintenance work on {user_of(g, p)} records.",
            f"Database upkeep shall stay routine for the administrators.",
        ]
        return g.pick(forms)

    g.emit("MN", release, 6)
    g.emit("MN", modular, 6)
    g.emit("MN", maintain, 5)


def gen_sc(g):
    def concurrent(p):
        n = g.pick([1000, 1500, 2000, 3000])
        adj = g.pick(["simultaneous", "concurrent", "parallel"])
        forms = [
            f"The {g.product()} shall handle {n} {adj} {g.pick(['sessions', 'connections'])} without degradation.",
            f"The {g.product()} shall support {n} {adj} {user_of(g, p)} {g.pick(['sessions', 'connections'])} at launch.",
            f"The {g.product()} shall handle {n} {adj} sessions for {user_of(g, p)}s.",
        ]
        return g.pick(forms)

    def growth(p):
        forms = [
            f"The {g.product()} shall scale to twice the existing {user_of(g, p)} volume.",
            f"Storage capacity shall expand without redesign of the {g.product()}.",
            f"The {g.product()} shall scale by adding servers during peak seasons.",
        ]
        return g.pick(forms)

    def capacity(p):
        n = 100000
        forms = [
            f"The database shall hold {n} records while meeting the capacity targets.",
            f"The {g.product()} shall accommodate seasonal peaks in {user_of(g, p)} volume.",
            f"Archive capacity shall expand to hold more {user_of(g, p)} records.",
        ]
        return g.pick(forms)

    def noisy(p):
        forms = [
            f"The {g.product()} shall handle peak load with response times under 3 secs.",
            f"The {g.product()} shall remain usable at all times while handling 1000 sessions.",
            f"The {g.product()} shall handle 1000 sessions and respond in under 3 secs.",
        ]
        return g.pick(forms)

    g.emit("SC", concurrent, 7)
    g.emit("SC", growth, 6)
    g.emit("SC", capacity, 5)
    g.emit("SC", noisy, 3)


def gen_l(g):
    def comply(p):
        cv = g.pick(["comply with", "conform to", "adhere to"])
        forms = [
            f"The {g.product()} shall {cv} the regional data protection {g.pick(['regulations', 'statutes', 'directives', 'legislation'])}.",
            f"The {g.product()} shall {cv} the accessibility {g.pick(['regulations', 'directives', 'legislation'])} for public bodies.",
            f"The {g.product()} shall {cv} the national regulations for archived records at all times.",
            f"The {g.product()} shall {cv} consumer protection law.",
        ]
        return g.pick(forms)

    def legal(p):
        forms = [
            f"Stored {user_of(g, p)} records shall satisfy the retention periods required by law at all times.",
            f"The {g.product()} shall protect {user_of(g, p)} records as the law requires.",
            f"Retention periods for tax records shall follow the national {g.pick(['regulations', 'statutes', 'legislation'])}.",
            f"Handling of {user_of(g, p)} records shall follow the data protection regulations.",
        ]
        return g.pick(forms)

    g.emit("L", comply, 7)
    g.emit("L", legal, 6)


def gen_ft(g):
    def recover(p):
        forms = [
            f"The {g.product()} shall recover gracefully from sudden {g.pick(['failures', 'crashes', 'faults'])} without loss of committed data.",
            f"After power failures the {g.product()} shall restore the servers from backups.",
            f"The {g.product()} shall recover from {user_of(g, p)} import failures without manual cleanup.",
            f"The {g.product()} shall restore service within 30 minutes of a hardware failure.",
        ]
        return g.pick(forms)

    def tolerate(p):
        forms = [
            f"The {g.product()} shall {g.pick(['tolerate', 'withstand', 'survive'])} single node {g.pick(['failures', 'faults'])} gracefully.",
            f"Failures in the reporting module shall not bring down the {g.product()}.",
            f"The {g.product()} shall continue to handle requests during search index failures.",
        ]
        return g.pick(forms)

    g.emit("FT", recover, 6)
    g.emit("FT", tolerate, 4)


def gen_po(g):
    g.emit("PO", lambda p: (
        f"The {g.product()} shall be portable to other operating systems "
        f"with minimal changes."), 1)


# ------------------------------------------------------------- output ----

def write_csv(rows, path):
    lines = ["project_id,text,label"]
    for project, text, label in rows:
        quoted = '"' + text.replace('"', '""') + '"'
        lines.append(f"{project},{quoted},{label}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_arff(rows, path):
    lines = [
        "% Demo requirements corpus, PROMISE-style layout.",
        "% Fields: project id, requirement text, label.",
        "@relation requirements",
        "@attribute project numeric",
        "@attribute text string",
        "@attribute label {F,A,FT,L,LF,MN,O,PE,PO,SC,SE,US}",
        "@data",
    ]
    for project, text, label in rows:
        quoted = "'" + text.replace("'", "\\'") + "'"
        lines.append(f"{project},{quoted},{label}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"),
                        help="output directory (default: ../data)")
    args = parser.parse_args()

    g = Gen(SEED)
    gen_fr(g)
    gen_pe(g)
    gen_a(g)
    gen_se(g)
    gen_us(g)
    gen_o(g)
    gen_lf(g)
    gen_mn(g)
    gen_sc(g)
    gen_l(g)
    gen_po(g)
    gen_ft(g)

    counts = {}
    for _, _, label in g.rows:
        counts[label] = counts.get(label, 0) + 1
    expect = dict(SUB_COUNTS)
    expect["F"] = FR_COUNT
    assert counts == expect, (counts, expect)
    assert len(g.rows) == 625, len(g.rows)

    g.rng.shuffle(g.rows)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(g.rows, out / "demo_corpus.csv")
    write_arff(g.rows, out / "demo_corpus.arff")
    print(f"wrote {out / 'demo_corpus.csv'} and {out / 'demo_corpus.arff'}"
          f" ({len(g.rows)} rows)")


if __name__ == "__main__":
    main()
