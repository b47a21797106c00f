#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgalign {

// All library failures throw Error. `category()` is a stable, machine-parseable
// tag; the CLI prints failures as "error[<category>]: <message>" on one line.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

    std::string formatted() const {
        return "error[" + category_ + "]: " + what();
    }

private:
    std::string category_;
};

// Exhaustive enumeration asked for more players than the exact-mode cap.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& message) : Error("capacity", message) {}
};

// A caller-supplied value violates an operation precondition.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& message) : Error("argument", message) {}
};

// Matrix/vector dimensions do not line up.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& message) : Error("shape", message) {}
};

// Numerically degenerate input (zero-norm vector, non-finite payoff).
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& message) : Error("degenerate-input", message) {}
};

// Invalid configuration value (tau <= 0, negative alpha, even kernel taps, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("config", message) {}
};

// File content violates a schema rule.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse", message) {}
};

// Filesystem-level failure (missing file, unwritable output).
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

// KL(p||q) with q == 0 where p > 0.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& message) : Error("divergence", message) {}
};

} // namespace tgalign
