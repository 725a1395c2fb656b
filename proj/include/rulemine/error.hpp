#pragma once

#include <stdexcept>
#include <string>

namespace rulemine {

/// Error categories, aligned with the CLI exit codes.
enum class ErrorKind {
    validation = 1,  // bad parameters, malformed input, schema mismatches
    io = 2,          // missing/unreadable/unwritable files
    internal = 3,    // broken internal invariants (indicates a bug)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

inline Error validation_error(const std::string& message) {
    return Error(ErrorKind::validation, message);
}
inline Error io_error(const std::string& message) {
    return Error(ErrorKind::io, message);
}
inline Error internal_error(const std::string& message) {
    return Error(ErrorKind::internal, message);
}

}  // namespace rulemine
