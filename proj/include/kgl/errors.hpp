#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgl {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& msg, std::size_t p)
        : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct NegativeValuation : Error {
    explicit NegativeValuation(const std::string& msg = "negative t-adic valuation") : Error(msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg = "size mismatch") : Error(msg) {}
};

struct Singular : Error {
    explicit Singular(const std::string& msg = "singular matrix") : Error(msg) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg = "determinant is not a unit") : Error(msg) {}
};

struct SectionMismatch : Error {
    explicit SectionMismatch(const std::string& msg = "sections differ") : Error(msg) {}
};

struct IntegralityViolation : Error {
    explicit IntegralityViolation(const std::string& msg = "entry leaves the valuation ring") : Error(msg) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg = "permutation pair is not admissible") : Error(msg) {}
};

struct ZeroPivot : Error {
    int k;
    explicit ZeroPivot(int step)
        : Error("zero pivot at elimination step " + std::to_string(step)), k(step) {}
};

struct UnsupportedDegenerate : Error {
    explicit UnsupportedDegenerate(const std::string& msg = "identically vanishing section not supported here")
        : Error(msg) {}
};

struct InvalidStratumData : Error {
    explicit InvalidStratumData(const std::string& msg = "vanishing pattern does not match stratum") : Error(msg) {}
};

struct Inconsistent : Error {
    explicit Inconsistent(const std::string& msg = "inconsistent decomposition data") : Error(msg) {}
};

struct TypeMismatch : Error {
    explicit TypeMismatch(const std::string& msg = "vanishing pattern does not match declared type") : Error(msg) {}
};

struct NotASubbundle : Error {
    explicit NotASubbundle(const std::string& msg = "stacked map does not have full fibre rank") : Error(msg) {}
};

}  // namespace kgl
