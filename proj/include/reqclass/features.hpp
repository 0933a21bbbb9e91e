#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reqclass/pos.hpp"

namespace reqclass {

struct SyntacticCounts {
    int adjectives = 0;
    int adverbs = 0;
    int adverbs_modifying_verbs = 0;
    int cardinals = 0;
    int degree_adj_adv = 0;
};

enum class SyntacticKind {
    Adjectives,
    Adverbs,
    AdverbsModifyingVerbs,
    Cardinals,
    DegreeAdjAdv,
};
constexpr int kSyntacticKinds = 5;

const char* syntactic_kind_name(SyntacticKind k);
int syntactic_count(const SyntacticCounts& c, SyntacticKind k);

// JJ* -> adjectives, RB* -> adverbs, RB* within two tokens of a VB* ->
// adverbs_modifying_verbs, CD -> cardinals, JJR/JJS/RBR/RBS -> degree.
SyntacticCounts count_syntactic(const std::vector<Token>& tokens);

struct SyntacticRanking {
    // Fraction of requirements where the count is non-zero.
    std::array<double, kSyntacticKinds> probability{};
    std::vector<SyntacticKind> selected;
};

// Selects the kinds whose occurrence probability strictly exceeds cutoff.
SyntacticRanking rank_syntactic(const std::vector<std::vector<Token>>& docs,
                                double cutoff);

enum class KeywordKind {
    Adjective,
    Adverb,
    Modal,
    Determiner,
    Verb,
    Preposition,
    SingularNoun,
    PluralNoun,
};
constexpr int kKeywordKinds = 8;

const char* keyword_kind_name(KeywordKind k);
bool pos_in_keyword_group(Pos p, KeywordKind k);

struct KeywordGroup {
    KeywordKind kind = KeywordKind::Adjective;
    std::map<std::string, double> selected; // word -> smoothed P(NFR | word)
};

// score(w) = (occurrences of w in NFR requirements + 1) /
//            (occurrences of w in all requirements + 2),
// counted over tokens tagged with the group's POS; w is selected when
// score > cutoff or score < 1 - cutoff.
KeywordGroup keyword_discrimination(const std::vector<std::vector<Token>>& docs,
                                    const std::vector<bool>& is_nfr,
                                    KeywordKind kind, double cutoff);

struct FeatureSpec {
    std::vector<SyntacticKind> selected_syntactic;
    std::vector<KeywordGroup> keyword_groups;
    double cutoff_syntactic = 0.8;
    double cutoff_keywords = 0.7;

    std::size_t feature_count() const {
        return selected_syntactic.size() + keyword_groups.size();
    }
    std::vector<std::string> feature_names() const;

    void save(std::ostream& out) const;
    static FeatureSpec load(std::istream& in);
};

// Ranks syntactic features over all documents and fits one keyword group per
// kind from the FR/NFR split.
FeatureSpec fit_feature_spec(const std::vector<std::vector<Token>>& docs,
                             const std::vector<bool>& is_nfr,
                             double cutoff_syntactic = 0.8,
                             double cutoff_keywords = 0.7);

// Syntactic counts first (spec order), then one entry per keyword group:
// the number of tokens whose lowercased surface is in the group's set.
std::vector<double> extract_vector(const std::vector<Token>& tokens,
                                   const FeatureSpec& spec);

} // namespace reqclass
