#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "reqclass/corpus.hpp"
#include "reqclass/pos.hpp"

namespace reqclass {

// Lowercased alphabetic terms of a token stream with stopwords removed; the
// unit over which co-occurrence is counted.
std::vector<std::string> content_terms(const std::vector<Token>& tokens);

// Symmetric term co-occurrence counts with a whole-requirement window.
class CooccurrenceIndex {
public:
    CooccurrenceIndex() = default;

    // Each inner vector is one requirement's term list, taken as-is.
    static CooccurrenceIndex build(const std::vector<std::vector<std::string>>& requirements);

    bool cooccurs(const std::string& a, const std::string& b) const;
    int count(const std::string& a, const std::string& b) const;

    // CO(w): terms seen in the same requirement as w. Empty for unseen w.
    const std::set<std::string>& co(const std::string& w) const;

    // Union of CO(w) over a word list; the CO(NFR_x) of a guard.
    std::set<std::string> co_union(const std::vector<std::string>& words) const;

    std::size_t term_count() const { return counts_.size(); }

private:
    std::map<std::string, std::map<std::string, int>> counts_;
    std::map<std::string, std::set<std::string>> sets_;
};

// Tokenizes every requirement and counts co-occurrence over content terms.
CooccurrenceIndex build_cooccurrence(const Corpus& corpus);

} // namespace reqclass
