#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reqclass/pos.hpp"

namespace reqclass {

// Phrase -> USER/PRODUCT map with longest-match, case-insensitive lookup.
// File format: "<phrase> TAB <USER|PRODUCT>", '#' comments.
class EntityDictionary {
public:
    EntityDictionary() = default;

    static EntityDictionary parse(std::istream& in);
    static EntityDictionary load(const std::string& path);

    void add(const std::string& phrase, Entity entity);

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    // Longest dictionary phrase starting at token index i; returns
    // (length in tokens, entity) or length 0.
    std::pair<size_t, Entity> match_at(const std::vector<Token>& tokens,
                                       size_t i) const;

private:
    // key: lowercased phrase tokens joined by single spaces
    std::map<std::string, Entity> entries_;
    size_t max_phrase_len_ = 0;
};

// "USER" or "PRODUCT".
const char* entity_surface(Entity e);

// Collapses every maximal noun-phrase span containing a dictionary hit (or a
// literal USER/PRODUCT token) into the single token USER or PRODUCT. Never
// increases the token count.
std::vector<Token> entity_blind(const std::vector<Token>& tokens,
                                const EntityDictionary& dict);

} // namespace reqclass
