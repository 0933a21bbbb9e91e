#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace reqclass {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_ascii_digit(char c);
bool is_word_char(char c);

// True for tokens made of letters (plus internal hyphens/apostrophes),
// i.e. candidates for vocabulary terms.
bool is_alpha_token(std::string_view s);

// Default stop-word list used for document-term vectors and co-occurrence
// statistics. Sorted, lowercase.
const std::vector<std::string>& default_stopwords();
bool is_stopword(std::string_view lower);

} // namespace reqclass
