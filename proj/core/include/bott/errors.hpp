#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bott {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed tower or bundle data. `where` names the offending location,
/// e.g. "stages[1].summands[0]" or "byte 17".
class ValidationError : public Error {
public:
    ValidationError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A value cannot be represented in the requested coefficient domain, or an
/// operation needs a different domain (e.g. Steenrod squares need Z/2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Classes from different rings were combined.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// A filtration-preserving map was required but row `stage` (1-based) maps
/// outside the corresponding filtration step.
class FiltrationError : public Error {
public:
    FiltrationError(std::size_t stage, const std::string& what) : Error(what), stage_(stage) {}

    std::size_t stage() const noexcept { return stage_; }

private:
    std::size_t stage_;
};

/// A mathematical guarantee failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace bott
