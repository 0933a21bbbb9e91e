#include "reqclass/pos.hpp"

#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "reqclass/text.hpp"

namespace reqclass {

namespace {

constexpr std::array<std::string_view, 32> kPosNames = {
    "NN", "NNS", "NNP", "NNPS", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "MD", "JJ", "JJR", "JJS", "RB", "RBR", "RBS", "CD", "DT", "IN",
    "TO", "PRP", "PRP$", "CC", "WDT", "WP", "WRB", "EX", "SYM", ".",
    ",", ":"};

using Lexicon = std::unordered_map<std::string, Pos>;

void add_all(Lexicon& lex, std::initializer_list<const char*> words, Pos tag) {
    for (const char* w : words) lex.emplace(w, tag);
}

// Common verbs of requirements documents. Base form plus a regular
// -s/-es third person entry generated below.
const std::unordered_set<std::string>& verb_bases() {
    static const std::unordered_set<std::string> verbs = {
        "access",    "add",       "adjust",   "allow",    "appear",
        "apply",     "approve",   "archive",  "assign",   "authenticate",
        "authorize", "backup",    "browse",   "calculate", "cancel",
        "capture",   "change",    "check",    "click",    "comply",
        "configure", "confirm",   "conform",  "connect",  "contain",
        "continue",  "create",    "customize", "define",  "delete",
        "deliver",   "deploy",    "detect",   "determine", "disable",
        "display",   "download",  "edit",     "email",    "enable",
        "encrypt",   "ensure",    "enter",    "expire",   "export",
        "fail",      "filter",    "generate", "grant",    "handle",
        "happen",    "import",    "include",  "indicate", "inform",
        "input",     "install",   "integrate", "interface", "issue",
        "launch",    "limit",     "list",     "load",     "lock",
        "log",       "maintain",  "manage",   "meet",     "migrate",
        "modify",    "monitor",   "notify",   "occur",    "operate",
        "perform",   "permit",    "prevent",  "print",    "process",
        "produce",   "protect",   "provide",  "publish",  "query",
        "reach",     "receive",   "record",   "recover",  "refresh",
        "register",  "reject",    "remain",   "remove",   "render",
        "report",    "request",   "require",  "reset",    "respond",
        "restore",   "restrict",  "resume",   "retain",   "retrieve",
        "return",    "review",    "run",      "save",     "schedule",
        "scroll",    "search",    "select",   "send",     "set",
        "share",     "show",      "sort",     "specify",  "start",
        "store",     "submit",    "support",  "switch",   "synchronize",
        "take",      "track",     "transfer", "transmit", "update",
        "upload",    "use",       "validate", "verify",   "view",
        "withstand", "work",
    };
    return verbs;
}

std::string third_person(const std::string& base) {
    if (base.empty()) return base;
    char last = base.back();
    if (last == 's' || last == 'x' || last == 'z') return base + "es";
    if (base.size() >= 2) {
        std::string tail2 = base.substr(base.size() - 2);
        if (tail2 == "sh" || tail2 == "ch") return base + "es";
    }
    if (last == 'y' && base.size() >= 2 &&
        std::string("aeiou").find(base[base.size() - 2]) == std::string::npos)
        return base.substr(0, base.size() - 1) + "ies";
    return base + "s";
}

const Lexicon& lexicon() {
    static const Lexicon lex = [] {
        Lexicon l;
        add_all(l, {"the", "a", "an", "this", "these", "those", "each",
                    "every", "all", "any", "some", "no", "another", "both",
                    "either", "neither", "such"},
                Pos::DT);
        add_all(l, {"shall", "will", "would", "should", "must", "can",
                    "could", "may", "might"},
                Pos::MD);
        add_all(l, {"of", "in", "on", "at", "by", "for", "with", "from",
                    "into", "onto", "within", "during", "per", "after",
                    "before", "under", "over", "between", "through", "via",
                    "upon", "about", "against", "across", "without", "than",
                    "as", "if", "while", "whether", "because", "until",
                    "once", "unless", "that", "throughout", "towards",
                    "toward", "above", "below", "up", "out", "off"},
                Pos::IN);
        l.emplace("to", Pos::TO);
        add_all(l, {"and", "or", "but", "nor", "plus", "&"}, Pos::CC);
        add_all(l, {"it", "they", "he", "she", "we", "you", "i", "them",
                    "him", "us", "me", "itself", "themselves", "himself",
                    "herself", "anyone", "everyone", "someone", "nobody"},
                Pos::PRP);
        add_all(l, {"its", "their", "his", "your", "our", "my"}, Pos::PRPS);
        add_all(l, {"which", "whose"}, Pos::WDT);
        add_all(l, {"who", "whom", "what"}, Pos::WP);
        add_all(l, {"when", "where", "why", "how"}, Pos::WRB);
        l.emplace("there", Pos::EX);
        add_all(l, {"not", "only", "also", "always", "never", "often",
                    "sometimes", "usually", "frequently", "currently",
                    "previously", "simultaneously", "concurrently", "very",
                    "too", "well", "instead", "otherwise", "then", "again",
                    "already", "still", "yet", "just", "here", "so",
                    "alltimes", "fast", "down", "twice", "properly",
                    "together"},
                Pos::RB);
        add_all(l, {"more", "less", "fewer", "greater", "higher", "lower",
                    "faster", "slower", "larger", "smaller", "longer",
                    "shorter", "better", "worse", "newer", "older", "bigger",
                    "easier", "simpler"},
                Pos::JJR);
        add_all(l, {"later", "sooner", "earlier", "further"}, Pos::RBR);
        add_all(l, {"most", "least", "best", "worst", "latest"}, Pos::JJS);
        // Irregular / common verb forms.
        l.emplace("be", Pos::VB);
        l.emplace("is", Pos::VBZ);
        l.emplace("are", Pos::VBP);
        l.emplace("was", Pos::VBD);
        l.emplace("were", Pos::VBD);
        l.emplace("been", Pos::VBN);
        l.emplace("being", Pos::VBG);
        l.emplace("am", Pos::VBP);
        l.emplace("has", Pos::VBZ);
        l.emplace("have", Pos::VBP);
        l.emplace("had", Pos::VBD);
        l.emplace("does", Pos::VBZ);
        l.emplace("do", Pos::VBP);
        l.emplace("did", Pos::VBD);
        l.emplace("made", Pos::VBN);
        l.emplace("given", Pos::VBN);
        l.emplace("taken", Pos::VBN);
        l.emplace("met", Pos::VBN);
        l.emplace("kept", Pos::VBN);
        l.emplace("sent", Pos::VBN);
        l.emplace("lost", Pos::VBN);
        l.emplace("built", Pos::VBN);
        for (const auto& v : verb_bases()) {
            l.emplace(v, Pos::VB);
            l.emplace(third_person(v), Pos::VBZ);
        }
        // Frequent adjectives, including ones the suffix rules would miss.
        add_all(l, {"available", "easy", "secure", "able", "new", "current",
                    "valid", "invalid", "correct", "specific", "multiple",
                    "single", "simultaneous", "appropriate", "necessary",
                    "low", "high", "full", "graphical", "consistent",
                    "intuitive", "responsive", "reliable", "scalable",
                    "maintainable", "portable", "accessible", "confidential",
                    "sensitive", "additional", "average", "maximum",
                    "minimum", "total", "online", "offline", "manual",
                    "automatic", "visual", "audible", "mandatory", "optional",
                    "previous", "prior", "next", "last", "first", "final",
                    "same", "different", "common", "standard", "main",
                    "simple", "complete", "partial", "internal", "external",
                    "timely", "quick", "prompt", "immediate", "rapid",
                    "speedy", "swift", "instant", "reasonable", "acceptable",
                    "minimal", "malicious", "unauthorized", "concurrent",
                    "peak", "normal", "free"},
                Pos::JJ);
        // Time units and other nouns that look like something else.
        add_all(l, {"second", "minute", "hour", "day", "week", "month",
                    "year", "millisecond", "time", "user", "product",
                    "system", "number", "order", "server", "folder",
                    "member", "error", "uptime", "downtime", "response",
                    "interface", "login", "logon", "password", "username",
                    "everyday"},
                Pos::NN);
        add_all(l, {"seconds", "minutes", "hours", "days", "weeks", "months",
                    "years", "milliseconds", "times", "users", "products"},
                Pos::NNS);
        l.emplace("%", Pos::NN);
        return l;
    }();
    return lex;
}

bool numeric_token(const std::string& s) {
    bool digit = false;
    for (char c : s) {
        if (is_ascii_digit(c)) {
            digit = true;
        } else if (c != '.' && c != '/' && c != ',' && c != ':' && c != '%' &&
                   c != '-') {
            return false;
        }
    }
    return digit;
}

const std::unordered_set<std::string>& spelled_numbers() {
    static const std::unordered_set<std::string> nums = {
        "one", "two",   "three", "four",  "five",    "six",      "seven",
        "eight", "nine", "ten",  "twenty", "thirty", "fifty",    "hundred",
        "thousand", "million", "zero", "dozen"};
    return nums;
}

bool all_caps(const std::string& s) {
    if (s.size() < 2) return false;
    for (char c : s)
        if (!std::isupper(static_cast<unsigned char>(c))) return false;
    return true;
}

Pos tag_one(const std::string& surface) {
    if (surface.empty()) return Pos::Other;
    char c0 = surface[0];
    if (!std::isalnum(static_cast<unsigned char>(c0)) && surface.size() == 1) {
        if (c0 == '.' || c0 == '!' || c0 == '?') return Pos::Period;
        if (c0 == ',') return Pos::Comma;
        if (c0 == ':' || c0 == ';') return Pos::Colon;
        if (c0 == '&') return Pos::CC;
        if (c0 == '%') return Pos::NN;
        return Pos::SYM;
    }
    if (numeric_token(surface)) return Pos::CD;
    const auto& lex = lexicon();
    std::string lower = to_lower(surface);
    if (auto it = lex.find(lower); it != lex.end()) return it->second;
    if (spelled_numbers().count(lower)) return Pos::CD;
    if (all_caps(surface)) return Pos::NNP;

    // Suffix heuristics for open-class words.
    auto ends_with = [&](std::string_view suf) {
        return lower.size() > suf.size() + 1 &&
               lower.compare(lower.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with("ly")) return Pos::RB;
    if (ends_with("ing")) return Pos::VBG;
    if (ends_with("ed")) return Pos::VBN;
    if (ends_with("est")) return Pos::JJS;
    if (ends_with("able") || ends_with("ible") || ends_with("ful") ||
        ends_with("ous") || ends_with("ive") || ends_with("ical"))
        return Pos::JJ;
    if (lower.size() > 3 && lower.back() == 's' && lower[lower.size() - 2] != 's' &&
        !ends_with("us") && !ends_with("is"))
        return Pos::NNS;
    if (std::isupper(static_cast<unsigned char>(c0))) return Pos::NNP;
    return Pos::NN;
}

} // namespace

std::string_view pos_name(Pos tag) {
    return kPosNames[static_cast<size_t>(tag) <
                             static_cast<size_t>(kPosNames.size())
                         ? static_cast<size_t>(tag)
                         : kPosNames.size() - 1];
}

std::optional<Pos> pos_from_name(std::string_view name) {
    for (size_t i = 0; i < kPosNames.size(); ++i)
        if (kPosNames[i] == name) return static_cast<Pos>(i);
    if (name == "PRPS") return Pos::PRPS;
    return std::nullopt;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
}

Pos tag_word(const std::string& word) { return tag_one(word); }

std::vector<Token> pos_tag(std::vector<Token> tokens) {
    for (auto& t : tokens) t.pos = tag_one(t.surface);

    // Contextual fixes. A noun right after a modal or "to" is really the
    // verb ("shall access"); a verb-s right after a determiner or adjective
    // is really a plural noun ("the records").
    for (size_t i = 1; i < tokens.size(); ++i) {
        Pos prev = tokens[i - 1].pos;
        Pos& cur = tokens[i].pos;
        if ((prev == Pos::MD || prev == Pos::TO) &&
            (cur == Pos::NN || cur == Pos::NNS || cur == Pos::VBZ ||
             cur == Pos::VBP))
            cur = Pos::VB;
        else if ((prev == Pos::DT || prev == Pos::PRPS || is_adjective(prev) ||
                  prev == Pos::CD) &&
                 cur == Pos::VBZ)
            cur = Pos::NNS;
    }
    return tokens;
}

std::vector<Token> pos_tag(const std::vector<std::string>& surfaces) {
    std::vector<Token> tokens;
    tokens.reserve(surfaces.size());
    for (const auto& s : surfaces) tokens.push_back(Token{s, Pos::NN, {}});
    return pos_tag(std::move(tokens));
}

} // namespace reqclass
