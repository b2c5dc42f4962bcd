#pragma once

#include <stdexcept>
#include <string>

namespace qlattice {

// Base for every failure the library reports. Callers that only care about
// "something was out of domain" can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("polynomial division by zero") {}
};

class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what) : Error(what) {}
};

class NegativeIndex : public Error {
public:
    explicit NegativeIndex(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace qlattice
