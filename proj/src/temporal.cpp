#include "reqclass/temporal.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <set>

#include "reqclass/text.hpp"

namespace reqclass {

namespace {

const std::set<std::string>& time_units() {
    static const std::set<std::string> u = {
        "millisecond", "milliseconds", "ms",
        "second",      "seconds",
        "minute",      "minutes",
        "hour",        "hours",
        "day",         "days",
        "week",        "weeks",
        "month",       "months",
        "year",        "years",
    };
    return u;
}

std::string unit_singular(const std::string& w) {
    if (w == "ms") return "millisecond";
    if (w.size() > 1 && w.back() == 's' && time_units().count(w)) {
        std::string s = w.substr(0, w.size() - 1);
        if (time_units().count(s)) return s;
    }
    return w;
}

bool is_time_unit(const std::string& lower) { return time_units().count(lower) != 0; }

bool is_month(const std::string& lower) {
    static const std::set<std::string> m = {
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december",
        "jan",     "feb",      "mar",       "apr",     "jun",      "jul",
        "aug",     "sep",      "sept",      "oct",     "nov",      "dec",
    };
    return m.count(lower) != 0;
}

bool is_frequency_adverb(const std::string& lower) {
    static const std::set<std::string> f = {
        "daily", "hourly", "weekly", "monthly", "quarterly", "yearly", "annually",
    };
    return f.count(lower) != 0;
}

bool parse_percentish(const std::string& surface, double* value, bool* had_percent) {
    std::string s;
    for (char c : surface)
        if (c != ',') s.push_back(c);
    *had_percent = false;
    if (!s.empty() && s.back() == '%') {
        *had_percent = true;
        s.pop_back();
    }
    if (s.empty()) return false;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0') return false;
    *value = v;
    return true;
}

std::string lower_surface(const Token& t) { return to_lower(t.surface); }

std::string join_span(const std::vector<Token>& tokens, std::size_t begin,
                      std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i > begin) out += ' ';
        out += tokens[i].surface;
    }
    return out;
}

struct Replacement {
    std::size_t begin, end;
    std::string insert;
};

// Applies non-overlapping replacements (sorted by begin) right to left so
// earlier indices stay valid, recording one trace entry per replacement.
bool apply_replacements(std::vector<Token>& tokens,
                        const std::vector<Replacement>& reps,
                        const std::string& rule,
                        std::vector<RuleTrace>* trace) {
    if (reps.empty()) return false;
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
        if (trace)
            trace->push_back({rule, join_span(tokens, it->begin, it->end), it->insert});
        Token t;
        t.surface = it->insert;
        t.pos = tag_word(it->insert);
        tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(it->begin),
                     tokens.begin() + static_cast<std::ptrdiff_t>(it->end));
        tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(it->begin), t);
    }
    return true;
}

} // namespace

std::string normalize_surface(const std::string& text) {
    static const std::regex mult_sign("(\\d)\\s*\xC3\x97\\s*(\\d)");
    static const std::regex twenty_four_seven(
        R"(\b24\s*[x*/-]\s*7(\s*[x*/-]\s*365)?\b)", std::regex::icase);
    static const std::regex everyday(R"(\beveryday\b)", std::regex::icase);
    static const std::regex sec_abbrev(R"(\bsecs?\b)", std::regex::icase);
    static const std::regex min_abbrev(R"(\bmins?\b)", std::regex::icase);

    std::string s = std::regex_replace(text, mult_sign, "$1x$2");
    s = std::regex_replace(s, twenty_four_seven,
                           "24 hours per day 365 days per year");
    s = std::regex_replace(s, everyday, "every day");
    s = std::regex_replace(s, sec_abbrev, "seconds");
    s = std::regex_replace(s, min_abbrev, "minutes");
    return s;
}

const char* temporal_kind_name(TemporalKind k) {
    switch (k) {
        case TemporalKind::Time: return "TIME";
        case TemporalKind::Date: return "DATE";
        case TemporalKind::Duration: return "DURATION";
        case TemporalKind::Set: return "SET";
    }
    return "DURATION";
}

std::vector<TemporalEntity> temporal_tag(const std::vector<Token>& tokens) {
    const std::size_t n = tokens.size();
    std::vector<std::string> low(n);
    for (std::size_t i = 0; i < n; ++i) low[i] = lower_surface(tokens[i]);

    auto is_cd = [&](std::size_t i) { return tokens[i].pos == Pos::CD; };

    std::vector<TemporalEntity> out;
    std::size_t i = 0;
    while (i < n) {
        std::size_t best_len = 0;
        TemporalKind best_kind = TemporalKind::Duration;

        auto consider = [&](std::size_t len, TemporalKind kind) {
            if (len > best_len) {
                best_len = len;
                best_kind = kind;
            }
        };

        // SET: frequency expressions.
        if (i + 3 < n && is_cd(i) &&
            (is_time_unit(low[i + 1]) || low[i + 1] == "time" || low[i + 1] == "times") &&
            low[i + 2] == "per" && is_time_unit(low[i + 3]))
            consider(4, TemporalKind::Set);
        if (i + 2 < n && is_cd(i) && low[i + 1] == "per" && is_time_unit(low[i + 2]))
            consider(3, TemporalKind::Set);
        if (i + 2 < n && low[i] == "at" && low[i + 1] == "all" && low[i + 2] == "times")
            consider(3, TemporalKind::Set);
        if (i + 2 < n && low[i] == "all" && low[i + 1] == "the" && low[i + 2] == "time")
            consider(3, TemporalKind::Set);
        if (i + 1 < n && (low[i] == "every" || low[i] == "each" || low[i] == "per") &&
            is_time_unit(low[i + 1]))
            consider(2, TemporalKind::Set);
        if (is_frequency_adverb(low[i])) consider(1, TemporalKind::Set);

        // DURATION: number + unit.
        if (i + 1 < n && is_cd(i) && is_time_unit(low[i + 1]))
            consider(2, TemporalKind::Duration);

        // TIME: clock values, am/pm, midnight/noon.
        if (i + 1 < n && is_cd(i) && (low[i + 1] == "am" || low[i + 1] == "pm"))
            consider(2, TemporalKind::Time);
        if (is_cd(i) && low[i].find(':') != std::string::npos)
            consider(1, TemporalKind::Time);
        if (low[i] == "midnight" || low[i] == "noon") consider(1, TemporalKind::Time);

        // DATE: month, optionally followed by day/year numbers.
        if (is_month(low[i])) {
            std::size_t len = 1;
            while (i + len < n && len < 3 && is_cd(i + len)) ++len;
            consider(len, TemporalKind::Date);
        }

        if (best_len == 0) {
            ++i;
            continue;
        }
        TemporalEntity e;
        e.kind = best_kind;
        e.begin = i;
        e.end = i + best_len;
        e.normalized = to_lower(join_span(tokens, e.begin, e.end));
        if (e.kind == TemporalKind::Duration)
            e.normalized = low[i] + " " + unit_singular(low[i + 1]);
        out.push_back(e);
        i = e.end;
    }
    return out;
}

namespace {

const std::vector<std::vector<std::string>>& bound_triggers() {
    // Longest first so the longest phrase ending before a duration wins.
    static const std::vector<std::vector<std::string>> t = {
        {"not", "be", "more", "than"},
        {"no", "longer", "than"},
        {"no", "more", "than"},
        {"no", "later", "than"},
        {"for", "less", "than"},
        {"at", "a", "maximum"},
        {"no", "later"},
        {"under"},
        {"in"},
    };
    return t;
}

bool is_positive_speed_adjective(const std::string& lower) {
    static const std::set<std::string> adj = {
        "prompt",  "immediate", "rapid",      "speedy",  "swift",  "instant",
        "reasonable", "acceptable", "minimal", "quick",   "timely", "fast",
    };
    return adj.count(lower) != 0;
}

bool is_fast_unit(const std::string& singular) {
    return singular == "millisecond" || singular == "second" || singular == "minute";
}

void pass_r1(std::vector<Token>& tokens, std::vector<RuleTrace>* trace) {
    auto entities = temporal_tag(tokens);
    std::vector<Replacement> reps;
    std::size_t done_upto = 0;
    for (const auto& e : entities) {
        if (e.kind != TemporalKind::Duration) continue;
        std::size_t k = e.begin;
        if (k > done_upto && to_lower(tokens[k - 1].surface) == "of") --k;
        for (const auto& trig : bound_triggers()) {
            if (trig.size() > k - done_upto) continue;
            bool match = true;
            for (std::size_t j = 0; j < trig.size(); ++j) {
                if (to_lower(tokens[k - trig.size() + j].surface) != trig[j]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                reps.push_back({k - trig.size(), e.begin, "within"});
                done_upto = e.end;
                break;
            }
        }
    }
    apply_replacements(tokens, reps, "R1", trace);
}

void pass_r2(std::vector<Token>& tokens, std::vector<RuleTrace>* trace) {
    auto entities = temporal_tag(tokens);
    std::vector<Replacement> reps;
    std::size_t i = 0;
    while (i < entities.size()) {
        std::size_t run_begin = entities[i].begin;
        std::size_t run_end = entities[i].end;
        bool has_set = entities[i].kind == TemporalKind::Set;
        std::size_t j = i + 1;
        while (j < entities.size()) {
            std::size_t gap = entities[j].begin - run_end;
            bool bridged = gap == 0;
            if (gap == 1) {
                std::string g = to_lower(tokens[run_end].surface);
                bridged = g == "," || g == "and" || g == "&";
            }
            if (!bridged) break;
            run_end = entities[j].end;
            has_set = has_set || entities[j].kind == TemporalKind::Set;
            ++j;
        }
        if (has_set) reps.push_back({run_begin, run_end, "alltimes"});
        i = j;
    }
    apply_replacements(tokens, reps, "R2", trace);
}

void pass_r3(std::vector<Token>& tokens, std::vector<RuleTrace>* trace) {
    auto entities = temporal_tag(tokens);
    std::vector<Replacement> reps;
    for (const auto& e : entities) {
        if (e.kind != TemporalKind::Duration) continue;
        if (e.begin == 0) continue;
        if (to_lower(tokens[e.begin - 1].surface) != "within") continue;
        std::string unit = unit_singular(to_lower(tokens[e.end - 1].surface));
        if (!is_fast_unit(unit)) continue;
        reps.push_back({e.begin - 1, e.end, "fast"});
    }
    apply_replacements(tokens, reps, "R3", trace);
}

void pass_r4(std::vector<Token>& tokens, std::vector<RuleTrace>* trace) {
    std::vector<Replacement> reps;
    const std::size_t n = tokens.size();
    std::size_t i = 0;
    while (i < n) {
        std::string low = to_lower(tokens[i].surface);
        if (is_positive_speed_adjective(low)) {
            std::size_t time_at = 0;
            for (std::size_t j = i + 1; j <= i + 2 && j < n; ++j) {
                std::string w = to_lower(tokens[j].surface);
                if (w == "time" || w == "times") {
                    time_at = j;
                    break;
                }
            }
            if (time_at > 0) {
                reps.push_back({i, time_at + 1, "fast"});
                i = time_at + 1;
                continue;
            }
        }
        if (low == "timely" || low == "quick") reps.push_back({i, i + 1, "fast"});
        ++i;
    }
    apply_replacements(tokens, reps, "R4", trace);
}

void pass_r5(std::vector<Token>& tokens, std::vector<RuleTrace>* trace) {
    std::vector<Replacement> reps;
    const std::size_t n = tokens.size();
    std::size_t i = 0;
    while (i < n) {
        if (tokens[i].pos != Pos::CD) {
            ++i;
            continue;
        }
        double value = 0;
        bool had_percent = false;
        if (!parse_percentish(tokens[i].surface, &value, &had_percent) ||
            value < 80.0 || value >= 100.0) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        if (!had_percent && j < n) {
            std::string w = to_lower(tokens[j].surface);
            if (w == "%" || w == "percent") ++j;
        }
        while (j < n && (tokens[j].pos == Pos::IN || tokens[j].pos == Pos::DT)) ++j;
        if (j < n) {
            std::string w = to_lower(tokens[j].surface);
            if (w == "time" || w == "times") {
                reps.push_back({i, j + 1, "alltimes"});
                i = j + 1;
                continue;
            }
        }
        ++i;
    }
    apply_replacements(tokens, reps, "R5", trace);
}

} // namespace

std::vector<Token> apply_temporal_rules(std::vector<Token> tokens,
                                        std::vector<RuleTrace>* trace) {
    pass_r1(tokens, trace);
    pass_r2(tokens, trace);
    pass_r3(tokens, trace);
    pass_r4(tokens, trace);
    pass_r5(tokens, trace);
    return tokens;
}

} // namespace reqclass
