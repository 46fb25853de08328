#pragma once

#include <stdexcept>
#include <string>

namespace stiffprobe {

/// Bad input: malformed files, violated invariants, out-of-range parameters.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text input that cannot be parsed; carries the offending line number.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, int line)
        : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Numerical failure: singular systems, non-convergence, factorization breakdown.
class SolveError : public std::runtime_error {
public:
    explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stiffprobe
