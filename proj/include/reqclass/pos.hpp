#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reqclass {

// Penn-style tag inventory, reduced to what the pipeline emits.
enum class Pos {
    NN, NNS, NNP, NNPS,
    VB, VBD, VBG, VBN, VBP, VBZ,
    MD, JJ, JJR, JJS, RB, RBR, RBS,
    CD, DT, IN, TO, PRP, PRPS, CC,
    WDT, WP, WRB, EX, SYM,
    Period, Comma, Colon, Other,
};

std::string_view pos_name(Pos tag);
std::optional<Pos> pos_from_name(std::string_view name);

inline bool is_noun(Pos t) {
    return t == Pos::NN || t == Pos::NNS || t == Pos::NNP || t == Pos::NNPS;
}
inline bool is_verb(Pos t) {
    return t == Pos::VB || t == Pos::VBD || t == Pos::VBG || t == Pos::VBN ||
           t == Pos::VBP || t == Pos::VBZ;
}
inline bool is_adjective(Pos t) {
    return t == Pos::JJ || t == Pos::JJR || t == Pos::JJS;
}
inline bool is_adverb(Pos t) {
    return t == Pos::RB || t == Pos::RBR || t == Pos::RBS;
}
inline bool is_degree(Pos t) {
    return t == Pos::JJR || t == Pos::JJS || t == Pos::RBR || t == Pos::RBS;
}
inline bool is_punct(Pos t) {
    return t == Pos::Period || t == Pos::Comma || t == Pos::Colon;
}

enum class Entity { User, Product };

struct Token {
    std::string surface;
    Pos pos = Pos::NN;
    std::optional<Entity> entity;
};

std::vector<std::string> surfaces(const std::vector<Token>& tokens);

// Deterministic lexicon + suffix tagger. Closed-class words come from a
// bundled lexicon; open-class words fall back to suffix heuristics and a
// default of NN. A short contextual pass fixes verb/noun splits after
// modals, "to" and determiners.
std::vector<Token> pos_tag(const std::vector<std::string>& surfaces);
std::vector<Token> pos_tag(std::vector<Token> tokens);

// Tag a single word in isolation (used when rules splice in new tokens).
Pos tag_word(const std::string& word);

} // namespace reqclass
