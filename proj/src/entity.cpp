#include "reqclass/entity.hpp"

#include <fstream>
#include <istream>

#include "reqclass/error.hpp"
#include "reqclass/text.hpp"
#include "reqclass/tokenize.hpp"

namespace reqclass {

EntityDictionary EntityDictionary::parse(std::istream& in) {
    EntityDictionary dict;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        auto tab = s.find('\t');
        if (tab == std::string::npos)
            throw DataError("dictionary entry missing TAB separator", line);
        std::string phrase = trim(s.substr(0, tab));
        std::string kind = to_lower(trim(s.substr(tab + 1)));
        if (phrase.empty()) throw DataError("empty dictionary phrase", line);
        Entity entity;
        if (kind == "user")
            entity = Entity::User;
        else if (kind == "product")
            entity = Entity::Product;
        else
            throw DataError("dictionary entity must be USER or PRODUCT, got '" +
                                kind + "'",
                            line);
        try {
            dict.add(phrase, entity);
        } catch (const DataError& e) {
            throw DataError(std::string(e.what()), line);
        }
    }
    return dict;
}

EntityDictionary EntityDictionary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dictionary file: " + path);
    return parse(in);
}

void EntityDictionary::add(const std::string& phrase, Entity entity) {
    auto words = tokenize(phrase);
    std::vector<std::string> lowered;
    for (auto& w : words) lowered.push_back(to_lower(w));
    std::string key = join(lowered, " ");
    auto [it, inserted] = entries_.emplace(key, entity);
    if (!inserted && it->second != entity)
        throw DataError("phrase '" + phrase + "' mapped to both USER and PRODUCT");
    max_phrase_len_ = std::max(max_phrase_len_, words.size());
}

std::pair<size_t, Entity> EntityDictionary::match_at(
    const std::vector<Token>& tokens, size_t i) const {
    size_t limit = std::min(max_phrase_len_, tokens.size() - i);
    for (size_t len = limit; len >= 1; --len) {
        std::vector<std::string> lowered;
        for (size_t j = 0; j < len; ++j)
            lowered.push_back(to_lower(tokens[i + j].surface));
        auto it = entries_.find(join(lowered, " "));
        if (it != entries_.end()) return {len, it->second};
    }
    return {0, Entity::User};
}

namespace {

bool np_tag(Pos t) {
    return is_noun(t) || is_adjective(t) || t == Pos::VBN || t == Pos::VBG;
}

} // namespace

const char* entity_surface(Entity e) {
    return e == Entity::User ? "USER" : "PRODUCT";
}

std::vector<Token> entity_blind(const std::vector<Token>& tokens,
                                const EntityDictionary& dict) {
    const size_t n = tokens.size();

    // Leftmost-longest dictionary hits; literal USER/PRODUCT tokens from a
    // previous pass count as hits of length one.
    struct Hit {
        size_t begin, end;
        Entity entity;
    };
    std::vector<Hit> hits;
    std::vector<bool> in_hit(n, false);
    for (size_t i = 0; i < n;) {
        if (tokens[i].surface == "USER" || tokens[i].surface == "PRODUCT") {
            hits.push_back({i, i + 1,
                            tokens[i].surface == "USER" ? Entity::User
                                                        : Entity::Product});
            in_hit[i] = true;
            ++i;
            continue;
        }
        auto [len, entity] = dict.match_at(tokens, i);
        if (len > 0) {
            hits.push_back({i, i + len, entity});
            for (size_t j = i; j < i + len; ++j) in_hit[j] = true;
            i += len;
        } else {
            ++i;
        }
    }
    if (hits.empty()) return tokens;

    // Extend each hit over its noun phrase, never across another hit and
    // never past the previous extended span.
    std::vector<Hit> spans;
    for (const Hit& h : hits) {
        size_t lo = spans.empty() ? 0 : spans.back().end;
        size_t begin = h.begin;
        while (begin > lo && !in_hit[begin - 1] && np_tag(tokens[begin - 1].pos))
            --begin;
        size_t end = h.end;
        while (end < n && !in_hit[end] && np_tag(tokens[end].pos)) ++end;
        spans.push_back({begin, end, h.entity});
    }

    std::vector<Token> out;
    out.reserve(n);
    size_t next_span = 0;
    for (size_t i = 0; i < n;) {
        if (next_span < spans.size() && spans[next_span].begin == i) {
            Token collapsed;
            collapsed.surface = entity_surface(spans[next_span].entity);
            collapsed.pos = Pos::NNP;
            collapsed.entity = spans[next_span].entity;
            out.push_back(collapsed);
            i = spans[next_span].end;
            ++next_span;
        } else {
            out.push_back(tokens[i]);
            ++i;
        }
    }
    return out;
}

} // namespace reqclass
