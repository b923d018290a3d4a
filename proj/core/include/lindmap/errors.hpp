#pragma once

#include <stdexcept>
#include <string>

namespace lindmap {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(const std::string& what) : Error(what) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

class ParameterOutOfRange : public Error {
public:
    explicit ParameterOutOfRange(const std::string& what) : Error(what) {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& what) : Error(what) {}
};

class InvalidPartition : public Error {
public:
    explicit InvalidPartition(const std::string& what) : Error(what) {}
};

// Thrown by root bracketing when f(lo) and f(hi) share a sign.
class NoSignChange : public Error {
public:
    explicit NoSignChange(const std::string& what) : Error(what) {}
};

class AssignmentNotFound : public Error {
public:
    explicit AssignmentNotFound(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class UnknownFamily : public Error {
public:
    explicit UnknownFamily(const std::string& what) : Error(what) {}
};

} // namespace lindmap
