#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taulab/factor.hpp"

namespace taulab {

/// Dense table of tau(n), 1 <= n <= bound, from the eta-product
/// q-expansion. Immutable after construction.
struct TauTable {
    std::uint64_t bound = 0;
    std::vector<Int> values;  // values[n-1] = tau(n)

    const Int& at(std::uint64_t n) const;
};

inline constexpr std::uint64_t kDefaultTableMax = 1'000'000;

/// Exact tau(n) for n <= bound via eta^24 = (eta^3)^8: the sparse Jacobi
/// series for eta^3 followed by three dense truncated squarings.
TauTable build_tau_table(std::uint64_t bound, std::uint64_t max_bound = kDefaultTableMax);

/// tau(p^e) from the weight-12 Hecke recurrence seeded with tau(p) = a_p:
/// tau(p^(m+1)) = tau(p) tau(p^m) - p^11 tau(p^(m-1)).
Int tau_prime_power(const Int& p, unsigned e, const Int& a_p);

/// tau(n) assembled by multiplicativity over the factorization of n,
/// with prime seeds taken from the table. Throws InsufficientTable when a
/// prime factor of n exceeds the table bound (and n itself does too).
Int tau(std::uint64_t n, const TauTable& table);

/// Table file: "TAUTABLE v1 bound=<N> sha256=<hex of body>" header, then
/// "<n>\t<tau(n)>" lines, LF endings.
void store_table(const TauTable& table, const std::string& path);
TauTable load_table(const std::string& path);

}  // namespace taulab
