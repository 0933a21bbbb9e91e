#include "reqclass/rewrite.hpp"

#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <sstream>

#include "reqclass/entity.hpp"
#include "reqclass/error.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

struct PatToken {
    enum class Kind { Word, Phrase, Class, EntityRef, Dot, LParen, RParen, Pipe, Quant };
    Kind kind;
    std::string text;
    int min_rep = 0, max_rep = 0;
};

std::vector<PatToken> lex_pattern(const std::string& text) {
    std::vector<PatToken> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto word_char = [](char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
               c != '|' && c != '?' && c != '*' && c != '+' && c != '{' && c != '"';
    };
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            out.push_back({PatToken::Kind::LParen, "(", 0, 0});
            ++i;
        } else if (c == ')') {
            out.push_back({PatToken::Kind::RParen, ")", 0, 0});
            ++i;
        } else if (c == '|') {
            out.push_back({PatToken::Kind::Pipe, "|", 0, 0});
            ++i;
        } else if (c == '?') {
            out.push_back({PatToken::Kind::Quant, "?", 0, 1});
            ++i;
        } else if (c == '*') {
            out.push_back({PatToken::Kind::Quant, "*", 0, -1});
            ++i;
        } else if (c == '+') {
            out.push_back({PatToken::Kind::Quant, "+", 1, -1});
            ++i;
        } else if (c == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string::npos)
                throw DataError("pattern: unterminated '{' quantifier");
            std::string body = text.substr(i + 1, close - i - 1);
            int lo = 0, hi = 0;
            std::size_t comma = body.find(',');
            try {
                if (comma == std::string::npos) {
                    lo = hi = std::stoi(body);
                } else {
                    lo = std::stoi(body.substr(0, comma));
                    hi = std::stoi(body.substr(comma + 1));
                }
            } catch (const std::exception&) {
                throw DataError("pattern: invalid quantifier {" + body + "}");
            }
            if (lo < 0 || hi < lo) throw DataError("pattern: invalid quantifier {" + body + "}");
            out.push_back({PatToken::Kind::Quant, body, lo, hi});
            i = close + 1;
        } else if (c == '"') {
            std::size_t close = text.find('"', i + 1);
            if (close == std::string::npos) throw DataError("pattern: unterminated quote");
            out.push_back({PatToken::Kind::Phrase, text.substr(i + 1, close - i - 1), 0, 0});
            i = close + 1;
        } else if (c == '.') {
            out.push_back({PatToken::Kind::Dot, ".", 0, 0});
            ++i;
        } else {
            std::size_t j = i;
            while (j < n && word_char(text[j])) ++j;
            std::string w = text.substr(i, j - i);
            if (w[0] == '%')
                out.push_back({PatToken::Kind::Class, w.substr(1), 0, 0});
            else if (w[0] == '@')
                out.push_back({PatToken::Kind::EntityRef, w.substr(1), 0, 0});
            else
                out.push_back({PatToken::Kind::Word, to_lower(w), 0, 0});
            i = j;
        }
    }
    return out;
}

class PatternParser {
public:
    PatternParser(const std::vector<PatToken>& toks, int* group_counter)
        : toks_(toks), groups_(group_counter) {}

    std::vector<PatElem> parse_seq() {
        std::vector<PatElem> seq;
        while (pos_ < toks_.size() && toks_[pos_].kind != PatToken::Kind::RParen &&
               toks_[pos_].kind != PatToken::Kind::Pipe) {
            seq.push_back(parse_elem());
        }
        return seq;
    }

    std::size_t pos() const { return pos_; }

private:
    PatElem parse_elem() {
        PatElem e = parse_atom();
        if (pos_ < toks_.size() && toks_[pos_].kind == PatToken::Kind::Quant) {
            e.min_rep = toks_[pos_].min_rep;
            e.max_rep = toks_[pos_].max_rep; // -1: unbounded
            ++pos_;
        }
        return e;
    }

    PatElem parse_atom() {
        const PatToken& t = toks_[pos_];
        PatElem e;
        switch (t.kind) {
            case PatToken::Kind::Word:
                e.kind = PatElem::Kind::Word;
                e.word = t.text;
                ++pos_;
                return e;
            case PatToken::Kind::Phrase: {
                e.kind = PatElem::Kind::Phrase;
                for (auto& w : split_whitespace(t.text)) e.phrase.push_back(to_lower(w));
                if (e.phrase.empty()) throw DataError("pattern: empty quoted phrase");
                ++pos_;
                return e;
            }
            case PatToken::Kind::Class: {
                std::string name = t.text;
                if (!name.empty() && name.back() == '*') {
                    e.kind = PatElem::Kind::PosFamily;
                    e.family = name.substr(0, name.size() - 1);
                    if (e.family.empty()) throw DataError("pattern: bad POS class %*");
                } else {
                    e.kind = PatElem::Kind::PosExact;
                    auto p = pos_from_name(name);
                    if (!p) throw DataError("pattern: unknown POS tag %" + name);
                    e.pos = *p;
                }
                ++pos_;
                return e;
            }
            case PatToken::Kind::EntityRef:
                e.kind = PatElem::Kind::EntityTok;
                if (t.text == "USER")
                    e.entity = Entity::User;
                else if (t.text == "PRODUCT")
                    e.entity = Entity::Product;
                else
                    throw DataError("pattern: unknown entity @" + t.text);
                ++pos_;
                return e;
            case PatToken::Kind::Dot:
                e.kind = PatElem::Kind::Any;
                ++pos_;
                return e;
            case PatToken::Kind::LParen: {
                ++pos_;
                e.kind = PatElem::Kind::Group;
                e.group_index = ++*groups_;
                e.alts.push_back(parse_seq());
                while (pos_ < toks_.size() && toks_[pos_].kind == PatToken::Kind::Pipe) {
                    ++pos_;
                    e.alts.push_back(parse_seq());
                }
                if (pos_ >= toks_.size() || toks_[pos_].kind != PatToken::Kind::RParen)
                    throw DataError("pattern: unbalanced '('");
                ++pos_;
                for (const auto& alt : e.alts)
                    if (alt.empty())
                        throw DataError("pattern: empty alternative in group");
                return e;
            }
            default:
                throw DataError("pattern: unexpected '" + t.text + "'");
        }
    }

    const std::vector<PatToken>& toks_;
    int* groups_;
    std::size_t pos_ = 0;
};

bool pos_in_family(Pos p, const std::string& family) {
    std::string_view name = pos_name(p);
    return name.size() >= family.size() && name.substr(0, family.size()) == family;
}

struct MatchState {
    const std::vector<Token>* tokens = nullptr;
    std::vector<std::pair<std::size_t, std::size_t>>* groups = nullptr;
};

using Cont = std::function<bool(std::size_t)>;

bool m_seq(const std::vector<PatElem>& seq, std::size_t k, MatchState& st,
           std::size_t pos, const Cont& cont);

bool m_atom(const PatElem& e, MatchState& st, std::size_t pos, const Cont& cont) {
    const auto& toks = *st.tokens;
    const std::size_t n = toks.size();
    switch (e.kind) {
        case PatElem::Kind::Word:
            if (pos < n && to_lower(toks[pos].surface) == e.word) return cont(pos + 1);
            return false;
        case PatElem::Kind::Phrase: {
            if (pos + e.phrase.size() > n) return false;
            for (std::size_t j = 0; j < e.phrase.size(); ++j)
                if (to_lower(toks[pos + j].surface) != e.phrase[j]) return false;
            return cont(pos + e.phrase.size());
        }
        case PatElem::Kind::PosExact:
            if (pos < n && toks[pos].pos == e.pos) return cont(pos + 1);
            return false;
        case PatElem::Kind::PosFamily:
            if (pos < n && pos_in_family(toks[pos].pos, e.family)) return cont(pos + 1);
            return false;
        case PatElem::Kind::EntityTok: {
            if (pos >= n) return false;
            bool hit = (toks[pos].entity && *toks[pos].entity == e.entity) ||
                       toks[pos].surface == entity_surface(e.entity);
            return hit ? cont(pos + 1) : false;
        }
        case PatElem::Kind::Any:
            return pos < n ? cont(pos + 1) : false;
        case PatElem::Kind::Group: {
            auto& slot = (*st.groups)[static_cast<std::size_t>(e.group_index) - 1];
            auto saved = slot;
            for (const auto& alt : e.alts) {
                bool ok = m_seq(alt, 0, st, pos, [&](std::size_t end) {
                    slot = {pos, end};
                    if (cont(end)) return true;
                    slot = saved;
                    return false;
                });
                if (ok) return true;
            }
            slot = saved;
            return false;
        }
    }
    return false;
}

bool m_rep(const PatElem& e, int done, MatchState& st, std::size_t pos, const Cont& cont) {
    const int max = e.max_rep < 0 ? std::numeric_limits<int>::max() : e.max_rep;
    if (done < max) {
        bool ok = m_atom(e, st, pos, [&](std::size_t next) {
            return m_rep(e, done + 1, st, next, cont);
        });
        if (ok) return true;
    }
    return done >= e.min_rep ? cont(pos) : false;
}

bool m_seq(const std::vector<PatElem>& seq, std::size_t k, MatchState& st,
           std::size_t pos, const Cont& cont) {
    if (k == seq.size()) return cont(pos);
    return m_rep(seq[k], 0, st, pos, [&](std::size_t next) {
        return m_seq(seq, k + 1, st, next, cont);
    });
}

} // namespace

TokenPattern TokenPattern::parse(const std::string& text) {
    TokenPattern p;
    p.source_ = text;
    auto toks = lex_pattern(text);
    PatternParser parser(toks, &p.group_count_);
    p.seq_ = parser.parse_seq();
    if (parser.pos() != toks.size()) throw DataError("pattern: unbalanced ')'");
    if (p.seq_.empty()) throw DataError("pattern: empty");
    return p;
}

std::optional<TokenPattern::Match> TokenPattern::match_at(
    const std::vector<Token>& tokens, std::size_t start) const {
    std::vector<std::pair<std::size_t, std::size_t>> groups(
        static_cast<std::size_t>(group_count_), {kNpos, kNpos});
    MatchState st{&tokens, &groups};

    std::optional<Match> best;
    m_seq(seq_, 0, st, start, [&](std::size_t end) {
        if (!best || end > best->end) {
            Match m;
            m.begin = start;
            m.end = end;
            m.groups = groups;
            best = std::move(m);
        }
        return false; // explore every end; keep the longest
    });
    return best;
}

std::optional<TokenPattern::Match> TokenPattern::find(
    const std::vector<Token>& tokens, std::size_t start) const {
    for (std::size_t i = start; i < tokens.size(); ++i) {
        auto m = match_at(tokens, i);
        if (m) return m;
    }
    return std::nullopt;
}

namespace {

std::vector<ReplacementPiece> parse_replacement(const std::string& text,
                                                const std::string& rule_id,
                                                int group_count) {
    std::vector<ReplacementPiece> out;
    for (const auto& w : split_whitespace(text)) {
        ReplacementPiece p;
        if (w.size() > 1 && w[0] == '$') {
            p.is_group = true;
            try {
                p.group = std::stoi(w.substr(1));
            } catch (const std::exception&) {
                throw DataError("rule '" + rule_id + "': bad group reference " + w);
            }
            if (p.group < 1 || p.group > group_count)
                throw DataError("rule '" + rule_id + "': replacement references group " +
                                std::to_string(p.group) + " but pattern has " +
                                std::to_string(group_count));
        } else {
            p.word = w;
        }
        out.push_back(std::move(p));
    }
    if (out.empty()) throw DataError("rule '" + rule_id + "': empty replacement");
    return out;
}

} // namespace

std::vector<RewriteRule> parse_rules(std::istream& in) {
    std::vector<RewriteRule> rules;
    std::string line;
    int lineno = 0;

    std::string cur_id;
    bool in_rule = false;
    std::string pattern_text, replace_text;
    RewriteRule cur;

    auto strip_comment = [](std::string s) {
        std::size_t hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        return trim(s);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip_comment(line);
        if (s.empty()) continue;

        if (!in_rule) {
            if (s.rfind("rule ", 0) != 0 || s.back() != '{')
                throw DataError("expected 'rule <id> {'", lineno);
            cur = RewriteRule{};
            cur_id = trim(s.substr(5, s.size() - 6));
            if (cur_id.empty()) throw DataError("rule with empty id", lineno);
            cur.id = cur_id;
            pattern_text.clear();
            replace_text.clear();
            in_rule = true;
            continue;
        }

        if (s == "}") {
            if (pattern_text.empty())
                throw DataError("rule '" + cur_id + "': missing pattern");
            if (replace_text.empty())
                throw DataError("rule '" + cur_id + "': missing replace");
            try {
                cur.pattern = TokenPattern::parse(pattern_text);
            } catch (const DataError& e) {
                throw DataError("rule '" + cur_id + "': " + e.what());
            }
            cur.replacement =
                parse_replacement(replace_text, cur_id, cur.pattern.group_count());
            rules.push_back(cur);
            in_rule = false;
            continue;
        }

        std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw DataError("rule '" + cur_id + "': expected 'key: value'", lineno);
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (key == "target") {
            if (!nfr_from_code(value))
                throw DataError("rule '" + cur_id + "': unknown target " + value);
            cur.target_nfr = value;
        } else if (key == "pattern") {
            pattern_text = value;
        } else if (key == "guard") {
            for (auto& w : split(value, ',')) {
                std::string g = to_lower(trim(w));
                if (!g.empty()) cur.guard_keywords.push_back(g);
            }
        } else if (key == "replace") {
            replace_text = value;
        } else {
            throw DataError("rule '" + cur_id + "': unknown key '" + key + "'", lineno);
        }
    }
    if (in_rule) throw DataError("rule '" + cur_id + "': missing closing '}'");
    return rules;
}

std::vector<RewriteRule> load_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open rule file: " + path);
    return parse_rules(in);
}

namespace {

bool guard_passes(const RewriteRule& rule, const std::vector<Token>& tokens,
                  const TokenPattern::Match& m, const CooccurrenceIndex& index) {
    if (rule.guard_keywords.empty()) return true;
    std::set<std::string> nfr_set = index.co_union(rule.guard_keywords);
    if (nfr_set.empty()) return false;
    for (std::size_t i = m.begin; i < m.end; ++i) {
        std::string w = to_lower(tokens[i].surface);
        if (!is_alpha_token(w)) continue;
        for (const auto& t : index.co(w))
            if (nfr_set.count(t)) return true;
    }
    return false;
}

std::vector<Token> build_replacement(const RewriteRule& rule,
                                     const std::vector<Token>& tokens,
                                     const TokenPattern::Match& m) {
    std::vector<Token> out;
    for (const auto& piece : rule.replacement) {
        if (piece.is_group) {
            auto span = m.groups[static_cast<std::size_t>(piece.group) - 1];
            if (span.first == kNpos) continue;
            for (std::size_t i = span.first; i < span.second; ++i)
                out.push_back(tokens[i]);
        } else {
            Token t;
            t.surface = piece.word;
            t.pos = tag_word(piece.word);
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::string surface_span(const std::vector<Token>& tokens, std::size_t begin,
                         std::size_t end) {
    std::string s;
    for (std::size_t i = begin; i < end; ++i) {
        if (i > begin) s += ' ';
        s += tokens[i].surface;
    }
    return s;
}

} // namespace

std::vector<Token> apply_nfr_rules(std::vector<Token> tokens,
                                   const std::vector<RewriteRule>& rules,
                                   const CooccurrenceIndex& index,
                                   std::vector<RuleTrace>* trace) {
    for (const auto& rule : rules) {
        std::size_t pos = 0;
        while (pos < tokens.size()) {
            auto m = rule.pattern.find(tokens, pos);
            if (!m) break;
            if (m->end == m->begin || !guard_passes(rule, tokens, *m, index)) {
                pos = m->begin + 1;
                continue;
            }
            std::vector<Token> repl = build_replacement(rule, tokens, *m);
            if (trace)
                trace->push_back({rule.id, surface_span(tokens, m->begin, m->end),
                                  surface_span(repl, 0, repl.size())});
            tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(m->begin),
                         tokens.begin() + static_cast<std::ptrdiff_t>(m->end));
            tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(m->begin),
                          repl.begin(), repl.end());
            pos = m->begin + repl.size();
        }
    }
    return tokens;
}

} // namespace reqclass
