#pragma once

#include <string>
#include <vector>

namespace reqclass {

// Whitespace + punctuation tokenizer. Punctuation becomes separate tokens,
// except inside numeric expressions: "24/7", "99.9", "1,000" and "99.9%"
// each stay whole. Throws UsageError on empty input.
std::vector<std::string> tokenize(const std::string& text);

// Joins tokens with single spaces.
std::string detokenize(const std::vector<std::string>& tokens);

} // namespace reqclass
