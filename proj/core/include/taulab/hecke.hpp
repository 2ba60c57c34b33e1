#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "taulab/factor.hpp"

namespace taulab {

/// User-supplied integer Hecke eigenvalue data for a weight-k, level-N
/// eigenform. Ramanujan-Petersson violations are recorded per prime, not
/// rejected: bad data should be probe-able.
struct HeckeEigenData {
    std::string label;
    unsigned weight = 12;     // even, >= 12
    std::uint64_t level = 1;
    std::map<std::uint64_t, Int> prime_values;       // p -> a_f(p), p coprime to level
    std::set<std::uint64_t> petersson_violations;    // primes with a_p^2 > 4 p^(k-1)
};

/// Ingest the JSON document {label, weight, level, primes: [{p, ap}]}.
/// Big integers cross as decimal strings (plain numbers also accepted).
/// Throws FormatViolation on odd weight, weight < 12, or a keyed prime
/// sharing a factor with the level.
HeckeEigenData parse_hecke_eigen_data(const std::string& json_text);

/// a_f(p^e) by the Hecke recurrence
/// a_f(p^(n+1)) = a_f(p) a_f(p^n) - p^(k-1) a_f(p^(n-1)).
/// Throws UnknownPrime when p is not keyed in the data.
Int hecke_prime_power(const HeckeEigenData& data, std::uint64_t p, unsigned e);

}  // namespace taulab
