#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reqclass/cooccur.hpp"
#include "reqclass/pos.hpp"
#include "reqclass/temporal.hpp"

namespace reqclass {

// One element of a token pattern. Patterns are written in a small
// whitespace-separated language:
//
//   word            literal surface, case-insensitive
//   "two words"     consecutive literal surfaces
//   %MD  %VBP       exact POS tag
//   %VB* %NN*       POS tag family (prefix match)
//   @USER @PRODUCT  blinded entity token
//   .               any single token
//   ( a | b c )     capturing group with alternatives, numbered by '('
//   x? x* x+ x{m,n} quantifiers on the preceding element
struct PatElem {
    enum class Kind { Word, Phrase, PosExact, PosFamily, EntityTok, Any, Group };
    Kind kind = Kind::Word;
    std::string word;
    std::vector<std::string> phrase;
    Pos pos = Pos::NN;
    std::string family;
    Entity entity = Entity::User;
    std::vector<std::vector<PatElem>> alts;
    int group_index = 0; // 1-based for groups
    int min_rep = 1;
    int max_rep = 1;
};

class TokenPattern {
public:
    TokenPattern() = default;

    // Throws DataError on syntax errors.
    static TokenPattern parse(const std::string& text);

    struct Match {
        std::size_t begin = 0, end = 0;
        // 1-based group spans; npos/npos when a group did not participate.
        std::vector<std::pair<std::size_t, std::size_t>> groups;
    };

    // Longest match starting exactly at `start`.
    std::optional<Match> match_at(const std::vector<Token>& tokens,
                                  std::size_t start) const;

    // Leftmost (then longest) match at or after `start`.
    std::optional<Match> find(const std::vector<Token>& tokens,
                              std::size_t start = 0) const;

    int group_count() const { return group_count_; }
    const std::string& source() const { return source_; }

private:
    std::vector<PatElem> seq_;
    int group_count_ = 0;
    std::string source_;
};

struct ReplacementPiece {
    bool is_group = false;
    int group = 0;
    std::string word;
};

struct RewriteRule {
    std::string id;
    std::string target_nfr; // subcategory code or empty
    TokenPattern pattern;
    std::vector<std::string> guard_keywords; // empty: no co-occurrence guard
    std::vector<ReplacementPiece> replacement;
};

// Rule file grammar (documented in the README):
//   rule <id> {
//     target: SE
//     pattern: <token pattern>
//     guard: word, word, ...
//     replace: word $1 word ...
//   }
// '#' starts a comment. target and guard are optional.
std::vector<RewriteRule> parse_rules(std::istream& in);
std::vector<RewriteRule> load_rules(const std::string& path);

// Applies rules in file order, one pass each, scanning left to right. A
// match rewrites only when the rule has no guard or when the co-occurrence
// sets of the matched words intersect the union of the guard keywords'
// co-occurrence sets. Traces are appended per replacement using the rule id.
std::vector<Token> apply_nfr_rules(std::vector<Token> tokens,
                                   const std::vector<RewriteRule>& rules,
                                   const CooccurrenceIndex& index,
                                   std::vector<RuleTrace>* trace = nullptr);

} // namespace reqclass
