#pragma once

#include <stdexcept>
#include <string>

namespace reqclass {

// Bad flags, bad config files, invalid parameter combinations. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed corpora, dictionaries, rule files, model files. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg), line_(0) {}
    DataError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace reqclass
