#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylpi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCharacteristic : public Error {
public:
    using Error::Error;
};

class CharMismatch : public Error {
public:
    CharMismatch() : Error("operands have different characteristics") {}
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class MissingSymbol : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownFunction : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class DuplicateVariable : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class WrongMultidegree : public Error {
public:
    using Error::Error;
};

class NotMultihomogeneous : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidComposition : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a symbolic term whose x-exponent evaluates negative carries a
/// nonzero coefficient. Never expected; it would mean the symbolic engine is unsound.
class NegativeExponentWithNonzeroCoeff : public Error {
public:
    using Error::Error;
};

} // namespace weylpi
