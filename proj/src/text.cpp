#include "reqclass/text.hpp"

#include <algorithm>
#include <cctype>

namespace reqclass {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_alpha_token(std::string_view s) {
    if (s.empty()) return false;
    bool has_alpha = false;
    for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            has_alpha = true;
        } else if (c != '-' && c != '\'') {
            return false;
        }
    }
    return has_alpha;
}

const std::vector<std::string>& default_stopwords() {
    static const std::vector<std::string> words = {
        "a",    "about", "above", "after", "again",  "all",   "an",    "and",
        "any",  "are",   "as",    "at",    "be",     "been",  "being", "below",
        "best", "between", "both", "but",  "by",     "can",   "could", "did",
        "do",   "does",  "doing", "down",  "during", "each",  "few",   "for",
        "from", "further", "had",  "has",  "have",   "having", "he",   "her",
        "here", "hers",  "him",   "his",   "how",    "i",     "if",    "in",
        "into", "is",    "it",    "its",   "itself", "just",  "me",    "more",
        "most", "my",    "no",    "nor",   "not",    "now",   "of",    "off",
        "on",   "once",  "only",  "or",    "other",  "our",   "out",   "over",
        "own",  "per",   "s",     "same",  "she",    "should", "so",   "some",
        "such", "t",     "than",  "that",  "the",    "their", "them",  "then",
        "there", "these", "they", "this",  "those",  "through", "to",  "too",
        "under", "until", "up",   "upon",  "very",   "was",   "we",    "were",
        "what", "when",  "where", "which", "while",  "who",   "whom",  "why",
        "will", "with",  "would", "you",   "your",   "yours",
    };
    return words;
}

bool is_stopword(std::string_view lower) {
    const auto& sw = default_stopwords();
    return std::binary_search(sw.begin(), sw.end(), lower);
}

} // namespace reqclass
