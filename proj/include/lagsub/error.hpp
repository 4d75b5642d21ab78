#pragma once

#include <stdexcept>
#include <string>

namespace lagsub {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotNilpotent : public Error {
public:
    explicit NotNilpotent(const std::string& msg) : Error(msg) {}
};

class InvalidCartanMatrix : public Error {
public:
    explicit InvalidCartanMatrix(const std::string& msg) : Error(msg) {}
};

class NotARoot : public Error {
public:
    explicit NotARoot(const std::string& msg) : Error(msg) {}
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// Internal consistency failure while building structure constants.
class JacobiFailure : public Error {
public:
    explicit JacobiFailure(const std::string& msg) : Error(msg) {}
};

class ZeroCharacterValue : public Error {
public:
    explicit ZeroCharacterValue(const std::string& msg) : Error(msg) {}
};

class InvalidSubalgebra : public Error {
public:
    explicit InvalidSubalgebra(const std::string& msg) : Error(msg) {}
};

class InvalidCocycle : public Error {
public:
    explicit InvalidCocycle(const std::string& msg) : Error(msg) {}
};

class NotHStable : public Error {
public:
    explicit NotHStable(const std::string& msg) : Error(msg) {}
};

/// Abelian-ideal count disagreed with 2^rank.  Fatal self-check.
class PetersonMismatch : public Error {
public:
    explicit PetersonMismatch(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace lagsub
