#include "reqclass/cooccur.hpp"

#include <algorithm>

#include "reqclass/text.hpp"
#include "reqclass/tokenize.hpp"

namespace reqclass {

std::vector<std::string> content_terms(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) {
        std::string w = to_lower(t.surface);
        if (!is_alpha_token(w)) continue;
        if (is_stopword(w)) continue;
        out.push_back(std::move(w));
    }
    return out;
}

CooccurrenceIndex CooccurrenceIndex::build(
    const std::vector<std::vector<std::string>>& requirements) {
    CooccurrenceIndex idx;
    for (const auto& req : requirements) {
        std::set<std::string> uniq(req.begin(), req.end());
        for (auto a = uniq.begin(); a != uniq.end(); ++a) {
            idx.counts_[*a]; // every seen term gets an entry
            for (auto b = std::next(a); b != uniq.end(); ++b) {
                idx.counts_[*a][*b] += 1;
                idx.counts_[*b][*a] += 1;
            }
        }
    }
    for (const auto& [term, row] : idx.counts_) {
        auto& s = idx.sets_[term];
        for (const auto& [other, n] : row) s.insert(other);
    }
    return idx;
}

bool CooccurrenceIndex::cooccurs(const std::string& a, const std::string& b) const {
    return count(a, b) > 0;
}

int CooccurrenceIndex::count(const std::string& a, const std::string& b) const {
    auto it = counts_.find(a);
    if (it == counts_.end()) return 0;
    auto jt = it->second.find(b);
    return jt == it->second.end() ? 0 : jt->second;
}

const std::set<std::string>& CooccurrenceIndex::co(const std::string& w) const {
    static const std::set<std::string> empty;
    auto it = sets_.find(w);
    return it == sets_.end() ? empty : it->second;
}

std::set<std::string> CooccurrenceIndex::co_union(
    const std::vector<std::string>& words) const {
    std::set<std::string> out;
    for (const auto& w : words) {
        const auto& s = co(to_lower(w));
        out.insert(s.begin(), s.end());
    }
    return out;
}

CooccurrenceIndex build_cooccurrence(const Corpus& corpus) {
    std::vector<std::vector<std::string>> terms;
    terms.reserve(corpus.size());
    for (const auto& req : corpus.items()) {
        std::vector<Token> toks;
        for (auto& s : tokenize(req.text)) {
            Token t;
            t.surface = s;
            toks.push_back(std::move(t));
        }
        terms.push_back(content_terms(toks));
    }
    return CooccurrenceIndex::build(terms);
}

} // namespace reqclass
