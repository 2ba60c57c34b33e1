#pragma once

#include <stdexcept>
#include <string>

namespace taulab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInput : Error {
    ZeroInput() : Error("zero input") {}
};
struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error("not prime: " + what) {}
};
struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error("overflow: " + what) {}
};
struct IncompleteFactorization : Error {
    IncompleteFactorization() : Error("factorization incomplete (cofactor > 1)") {}
};
struct BoundTooLarge : Error {
    explicit BoundTooLarge(const std::string& what) : Error("bound too large: " + what) {}
};
struct IoFailure : Error {
    explicit IoFailure(const std::string& what) : Error("io failure: " + what) {}
};
struct FormatViolation : Error {
    explicit FormatViolation(const std::string& what) : Error("format violation: " + what) {}
};
struct UnknownPrime : Error {
    explicit UnknownPrime(const std::string& what) : Error("unknown prime: " + what) {}
};
struct InsufficientTable : Error {
    explicit InsufficientTable(const std::string& what) : Error("insufficient table: " + what) {}
};
struct ZeroEigenvalue : Error {
    ZeroEigenvalue() : Error("a_p = 0: pair degenerates") {}
};
struct ValuationTooLarge : Error {
    ValuationTooLarge() : Error("k - 1 - 2*nu < 1: valuation too large for weight") {}
};
struct OutsideDeligneRange : Error {
    OutsideDeligneRange() : Error("a_p^2 > 4 p^(k-1): outside Deligne range") {}
};
struct DegeneratePair : Error {
    DegeneratePair() : Error("pair ratio is a root of unity") {}
};
struct NotADivisor : Error {
    NotADivisor() : Error("t does not divide n") {}
};
struct DegenerateDiscriminant : Error {
    DegenerateDiscriminant() : Error("discriminant is zero") {}
};
struct NonCoprimePair : Error {
    NonCoprimePair() : Error("gcd(P, Q) != 1") {}
};
struct RootOfUnityPair : Error {
    RootOfUnityPair() : Error("gamma is a root of unity") {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error("cap exceeded: " + what) {}
};

}  // namespace taulab
