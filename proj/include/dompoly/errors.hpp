#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dompoly {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of an operation (Wheel(3), cycle_polynomial(0), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 input. `offset` is the byte position inside the record.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Recognised but unsupported encoding (sparse6, digraph6).
class UnsupportedFormatError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Graph order outside what the graph6 header can express.
class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

/// Graph order above the brute-force enumeration guard.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// ord_p(0) requested.
class UndefinedValuationError : public Error {
public:
    using Error::Error;
};

/// Two computation routes that must agree did not. Always an implementation bug.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace dompoly
