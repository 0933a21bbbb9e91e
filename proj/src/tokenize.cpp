#include "reqclass/tokenize.hpp"

#include <cctype>

#include "reqclass/error.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Punctuation that can stay inside a token when flanked by digits.
bool numeric_glue(char c) { return c == '/' || c == '.' || c == ',' || c == ':'; }

} // namespace

std::vector<std::string> tokenize(const std::string& text) {
    if (trim(text).empty()) throw UsageError("tokenize: empty input text");

    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };

    const size_t n = text.size();
    for (size_t i = 0; i < n; ++i) {
        char c = text[i];
        if (is_space(c)) {
            flush();
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur += c;
            continue;
        }
        bool prev_digit = !cur.empty() && is_ascii_digit(cur.back());
        bool next_digit = i + 1 < n && is_ascii_digit(text[i + 1]);
        if (numeric_glue(c) && prev_digit && next_digit) {
            cur += c; // 24/7, 99.9, 1,000, 09:00
            continue;
        }
        if (c == '%' && prev_digit) {
            cur += c; // 99.9%
            continue;
        }
        if ((c == '-' || c == '\'' || c == '_') && !cur.empty() && i + 1 < n &&
            std::isalnum(static_cast<unsigned char>(text[i + 1]))) {
            cur += c; // look-and-feel, user's, snake_case ids
            continue;
        }
        flush();
        tokens.emplace_back(1, c);
    }
    flush();
    return tokens;
}

std::string detokenize(const std::vector<std::string>& tokens) {
    return join(tokens, " ");
}

} // namespace reqclass
