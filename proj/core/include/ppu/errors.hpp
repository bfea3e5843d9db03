#pragma once

#include <stdexcept>
#include <string>

namespace ppu {

/// Base class for all recoverable library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/// A Gram matrix failed validation; the message names the failed criterion.
struct FormValidationError : Error {
    explicit FormValidationError(const std::string& what) : Error(what) {}
};

struct NotParaunitary : Error {
    explicit NotParaunitary(const std::string& what) : Error(what) {}
};

struct NotUnitary : Error {
    explicit NotUnitary(const std::string& what) : Error(what) {}
};

struct NotPure : Error {
    explicit NotPure(const std::string& what) : Error(what) {}
};

struct NotNegativeCone : Error {
    explicit NotNegativeCone(const std::string& what) : Error(what) {}
};

struct NotShiftClosed : Error {
    explicit NotShiftClosed(const std::string& what) : Error(what) {}
};

struct NotInInterval : Error {
    explicit NotInInterval(const std::string& what) : Error(what) {}
};

struct PositiveExponentPresent : Error {
    explicit PositiveExponentPresent(const std::string& what) : Error(what) {}
};

/// Malformed textual input (JSON payloads, scalar strings).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Internal consistency failure; indicates a bug, never expected at runtime.
struct AdjacencyViolation : std::logic_error {
    explicit AdjacencyViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace ppu
