#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taulab/factor.hpp"

namespace taulab {

/// Normalized Lucas-pair parameters housing (A_p, B_p): the roots of
/// x^2 - P x + Q with P = a_p / p^nu, Q = p^(k-1-2 nu), nu = nu_p(a_p).
/// gcd(P, Q) = 1 by construction, so (A_p, B_p) is a Lucas pair whenever
/// root_of_unity is false.
struct LucasPair {
    std::uint64_t p = 0;
    unsigned k = 12;
    Int a_p;
    unsigned nu = 0;
    Int P;
    Int Q;
    bool root_of_unity = false;

    Int discriminant() const { return P * P - 4 * Q; }
};

struct NormalizeOptions {
    bool allow_outside_deligne = false;  // skip the a_p^2 <= 4 p^(k-1) gate
    bool allow_root_of_unity = false;    // degenerate pairs, for error-path tests
};

/// Throws ZeroEigenvalue (a_p = 0), ValuationTooLarge (k-1-2nu < 1),
/// OutsideDeligneRange, RootOfUnityPair (unless overridden).
LucasPair normalize_pair(std::uint64_t p, unsigned k, const Int& a_p,
                         const NormalizeOptions& opts = {});

/// u_0 = 0, u_1 = 1, u_(n+1) = P u_n - Q u_(n-1).
Int lucas_u(const LucasPair& pair, std::uint64_t n);

/// u_0 .. u_n_max in one pass.
std::vector<Int> lucas_sequence(const LucasPair& pair, std::uint64_t n_max);

/// a_f(p^n) = p^(n nu) * u_(n+1).
Int eigenvalue_from_u(const LucasPair& pair, std::uint64_t n);

struct ValuationCheckResult {
    bool ok = true;
    std::uint64_t first_failure = 0;  // meaningful only when !ok
};

/// Verifies nu_p(a_f(p^n)) = n * nu for 1 <= n <= n_max (equivalently
/// p does not divide u_(n+1)).
ValuationCheckResult valuation_identity_check(const LucasPair& pair, std::uint64_t n_max);

enum class PrimitiveStatus { Found, Empty, Unknown };

std::string to_string(PrimitiveStatus s);

struct PrimitiveDivisorRecord {
    std::uint64_t index = 0;
    Int primitive_part = 1;
    std::optional<Int> witness_prime;
    PrimitiveStatus status = PrimitiveStatus::Empty;
};

/// |u_n| gcd-stripped against P, Q, P^2 - 4Q and every u_t with t < n;
/// every prime of the result is a primitive divisor. Witness search runs
/// within the factor budget; status Unknown means primitive_part > 1 but
/// no prime witness was certified in budget. Requires n >= 2 and a
/// non-degenerate pair (DegeneratePair otherwise).
PrimitiveDivisorRecord primitive_part(const LucasPair& pair, std::uint64_t n,
                                      const FactorBudget& budget = {});

struct OmegaCertificate {
    std::uint64_t n = 0;
    std::uint64_t threshold = 30;
    unsigned a_priori = 0;   // #{t | n : t > threshold}, free via BHV
    unsigned certified = 0;  // divisors t with pairwise-coprime primitive parts > 1
    bool has_unknown = false;
    std::vector<PrimitiveDivisorRecord> entries;  // sorted by index
};

/// Certified lower bound on omega(u_n): one primitive part per divisor
/// t of n, checked pairwise coprime and dividing u_n.
OmegaCertificate certified_omega_lower_bound(const LucasPair& pair, std::uint64_t n,
                                             std::uint64_t threshold = 30,
                                             const FactorBudget& budget = {});

/// Exact u_t | u_n test; t must divide n (NotADivisor otherwise).
bool divisibility_check(const LucasPair& pair, std::uint64_t t, std::uint64_t n);

/// Bilu-Luca general-degree threshold max{2^(d+1), 10^30 d^9} — evaluated
/// for reporting only, never iterated to.
double bilu_luca_threshold(unsigned degree);

/// JSON: {p, k, ap, n, threshold, entries: [{t, primitive_part,
/// witness_prime?, status}]} with big integers as decimal strings.
std::string certificate_to_json(const LucasPair& pair, const OmegaCertificate& cert);

}  // namespace taulab
