#pragma once

#include <stdexcept>
#include <string>

namespace qss {

// Process exit codes for the CLI. Library errors carry the code the front
// end should exit with, so the tool never pattern-matches message text.
enum class ErrorCode : int {
    usage = 2,         // bad arguments, malformed expressions, precondition violations
    unknown_word = 3,  // word not present in the vocabulary
    degenerate = 4,    // degenerate math: empty context basis, dependent senses, zero columns
    io = 5,            // filesystem, encoding, container-format violations
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

struct UnknownWordError : Error {
    explicit UnknownWordError(const std::string& what) : Error(ErrorCode::unknown_word, what) {}
};

struct DegenerateError : Error {
    explicit DegenerateError(const std::string& what) : Error(ErrorCode::degenerate, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace qss
