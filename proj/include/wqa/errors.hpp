#pragma once

#include <stdexcept>
#include <string>

namespace wqa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(q)") {}
};

struct OutOfRange : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct UnsupportedM : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

// Raised when a reduction exceeds its step budget or a product exceeds the
// configured word-length cap.  Producing a silently truncated element is
// never an option.
struct ReductionBudgetExceeded : Error {
    using Error::Error;
};

struct SectorMismatch : Error {
    using Error::Error;
};

struct GammaNotRoot : Error {
    using Error::Error;
};

struct GatingViolation : Error {
    using Error::Error;
};

struct TruncationTooTight : Error {
    using Error::Error;
};

struct InvalidExponent : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace wqa
