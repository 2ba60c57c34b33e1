#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "taulab/errors.hpp"

namespace taulab {

using Int = mpz_class;

/// Caps for the trial-division / Pollard-rho ladder.
struct FactorBudget {
    std::uint64_t trial_division_bound = 100'000;
    std::uint64_t rho_iteration_cap = 2'000'000;
    std::uint64_t wall_clock_cap_ms = 30'000;
};

/// sign * prod(prime^exponent) * cofactor reconstructs the input exactly.
/// cofactor > 1 means the budget ran out; the cofactor is composite or
/// of unknown primality, never a certified prime.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }
    Int reconstruct() const;
};

/// Primality of |n|. Deterministic Miller-Rabin (13 fixed bases) below
/// 3.317e24, 64 fixed prime bases above (error < 4^-64 per standard
/// Miller-Rabin analysis).
bool is_prime(const Int& n);

/// Trial division up to budget.trial_division_bound, then Brent-cycle
/// Pollard rho under the iteration and wall-clock caps. Throws ZeroInput
/// on n = 0. Always satisfies the Factorization invariants.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

struct OmegaResult {
    unsigned count = 0;   // lower bound when !complete
    bool complete = true;
};

/// Number of distinct listed primes; 0 for units (omega(0) = omega(+-1) = 0
/// is the caller's convention for the zero case).
OmegaResult omega(const Factorization& f);

/// Product of the distinct primes. Units give 1.
/// Throws IncompleteFactorization when cofactor > 1.
Int radical(const Factorization& f);

/// Radical of the listed primes only; a certified lower bound on the
/// radical when the factorization is incomplete.
Int known_radical(const Factorization& f);

/// All divisors of n in ascending order. n must fit the signed 64-bit
/// index domain (throws Overflow above 2^63 - 1 via the unsigned check).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Product of all primes <= r, r >= 2.
Int primorial(std::uint64_t r);

/// Largest e with p^e | n. Throws ZeroInput / NotPrime.
unsigned p_adic_valuation(const Int& n, const Int& p);

/// Primes <= bound, by sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace taulab
