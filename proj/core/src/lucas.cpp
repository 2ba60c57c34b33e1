#include "taulab/lucas.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "taulab/quadfield.hpp"

namespace taulab {

namespace {

// Remove from pi every prime it shares with guard, completely.
void strip_shared(Int& pi, const Int& guard) {
    if (guard == 0) return;
    Int g = gcd(pi, guard);
    while (g > 1) {
        do {
            pi /= g;
            g = gcd(pi, g);
        } while (g > 1);
        g = gcd(pi, guard);
    }
}

Int primitive_part_from(const std::vector<Int>& u, const LucasPair& pair, std::uint64_t n) {
    Int pi = abs(u[n]);
    strip_shared(pi, pair.P);
    strip_shared(pi, pair.Q);
    strip_shared(pi, pair.discriminant());
    for (std::uint64_t t = 2; t < n; ++t) strip_shared(pi, u[t]);  // u_1 = 1
    return pi;
}

PrimitiveDivisorRecord make_record(const std::vector<Int>& u, const LucasPair& pair,
                                   std::uint64_t n, const FactorBudget& budget) {
    PrimitiveDivisorRecord rec;
    rec.index = n;
    rec.primitive_part = primitive_part_from(u, pair, n);
    if (rec.primitive_part == 1) {
        rec.status = PrimitiveStatus::Empty;
        return rec;
    }
    // any certified prime factor is a witness; a partial factorization
    // with at least one listed prime is enough
    Factorization f = factorize(rec.primitive_part, budget);
    if (!f.factors.empty()) {
        rec.witness_prime = f.factors.front().first;
        rec.status = PrimitiveStatus::Found;
    } else {
        rec.status = PrimitiveStatus::Unknown;
    }
    return rec;
}

}  // namespace

LucasPair normalize_pair(std::uint64_t p, unsigned k, const Int& a_p,
                         const NormalizeOptions& opts) {
    if (a_p == 0) throw ZeroEigenvalue();
    if (k < 2 || k % 2 != 0) throw Error("weight must be even and >= 2");
    if (!is_prime(Int(static_cast<unsigned long>(p)))) throw NotPrime(std::to_string(p));

    LucasPair pair;
    pair.p = p;
    pair.k = k;
    pair.a_p = a_p;

    Int pz(static_cast<unsigned long>(p));
    Int norm;  // p^(k-1)
    mpz_ui_pow_ui(norm.get_mpz_t(), p, k - 1);
    if (!opts.allow_outside_deligne && a_p * a_p > 4 * norm) throw OutsideDeligneRange();

    pair.root_of_unity = gamma_is_root_of_unity(make_quadratic_pair(p, k, a_p));
    if (pair.root_of_unity) {
        if (!opts.allow_root_of_unity) throw RootOfUnityPair();
        // test-only degenerate object; normalization is moot, keep raw params
        pair.nu = 0;
        pair.P = a_p;
        pair.Q = norm;
        return pair;
    }

    pair.nu = p_adic_valuation(a_p, pz);
    if (static_cast<long>(k) - 1 - 2 * static_cast<long>(pair.nu) < 1) throw ValuationTooLarge();

    Int pnu;
    mpz_ui_pow_ui(pnu.get_mpz_t(), p, pair.nu);
    pair.P = a_p / pnu;
    mpz_ui_pow_ui(pair.Q.get_mpz_t(), p, k - 1 - 2 * pair.nu);
    return pair;
}

Int lucas_u(const LucasPair& pair, std::uint64_t n) {
    if (n == 0) return 0;
    Int prev = 0, cur = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        Int next = pair.P * cur - pair.Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Int> lucas_sequence(const LucasPair& pair, std::uint64_t n_max) {
    std::vector<Int> u;
    u.reserve(n_max + 1);
    u.emplace_back(0);
    if (n_max == 0) return u;
    u.emplace_back(1);
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        u.push_back(pair.P * u[i - 1] - pair.Q * u[i - 2]);
    }
    return u;
}

Int eigenvalue_from_u(const LucasPair& pair, std::uint64_t n) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), pair.p, static_cast<unsigned long>(n) * pair.nu);
    return scale * lucas_u(pair, n + 1);
}

ValuationCheckResult valuation_identity_check(const LucasPair& pair, std::uint64_t n_max) {
    // nu_p(a_f(p^n)) = n nu  iff  p does not divide u_(n+1)
    Int pz(static_cast<unsigned long>(pair.p));
    Int prev = 0, cur = 1;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Int next = pair.P * cur - pair.Q * prev;  // u_(n+1)
        prev = std::move(cur);
        cur = std::move(next);
        if (mpz_divisible_p(cur.get_mpz_t(), pz.get_mpz_t())) return {false, n};
    }
    return {true, 0};
}

std::string to_string(PrimitiveStatus s) {
    switch (s) {
        case PrimitiveStatus::Found: return "Found";
        case PrimitiveStatus::Empty: return "Empty";
        case PrimitiveStatus::Unknown: return "Unknown";
    }
    return "?";
}

PrimitiveDivisorRecord primitive_part(const LucasPair& pair, std::uint64_t n,
                                      const FactorBudget& budget) {
    if (pair.root_of_unity) throw DegeneratePair();
    if (n < 2) throw Error("primitive_part requires n >= 2");
    std::vector<Int> u = lucas_sequence(pair, n);
    return make_record(u, pair, n, budget);
}

OmegaCertificate certified_omega_lower_bound(const LucasPair& pair, std::uint64_t n,
                                             std::uint64_t threshold,
                                             const FactorBudget& budget) {
    if (pair.root_of_unity) throw DegeneratePair();
    OmegaCertificate cert;
    cert.n = n;
    cert.threshold = threshold;

    std::vector<std::uint64_t> divs = divisors(n);
    for (std::uint64_t t : divs) {
        if (t > threshold) ++cert.a_priori;
    }

    std::vector<Int> u = lucas_sequence(pair, n);
    std::vector<const Int*> nontrivial;
    for (std::uint64_t t : divs) {
        if (t < 2) continue;
        PrimitiveDivisorRecord rec = make_record(u, pair, t, budget);
        if (rec.status == PrimitiveStatus::Unknown) cert.has_unknown = true;
        cert.entries.push_back(std::move(rec));
    }
    // certified = parts > 1 that are pairwise coprime and divide u_n
    for (const auto& rec : cert.entries) {
        if (rec.primitive_part == 1) continue;
        bool ok = mpz_divisible_p(u[n].get_mpz_t(), rec.primitive_part.get_mpz_t());
        for (const Int* other : nontrivial) {
            if (gcd(rec.primitive_part, *other) != 1) ok = false;
        }
        if (ok) {
            ++cert.certified;
            nontrivial.push_back(&rec.primitive_part);
        }
    }
    return cert;
}

bool divisibility_check(const LucasPair& pair, std::uint64_t t, std::uint64_t n) {
    if (t == 0 || n % t != 0) throw NotADivisor();
    Int ut = lucas_u(pair, t);
    if (ut == 0) return lucas_u(pair, n) == 0;
    return mpz_divisible_p(lucas_u(pair, n).get_mpz_t(), ut.get_mpz_t()) != 0;
}

double bilu_luca_threshold(unsigned degree) {
    return std::max(std::pow(2.0, degree + 1.0), 1e30 * std::pow(degree, 9.0));
}

std::string certificate_to_json(const LucasPair& pair, const OmegaCertificate& cert) {
    nlohmann::json doc;
    doc["p"] = pair.p;
    doc["k"] = pair.k;
    doc["ap"] = pair.a_p.get_str();
    doc["n"] = cert.n;
    doc["threshold"] = cert.threshold;
    doc["a_priori"] = cert.a_priori;
    doc["certified"] = cert.certified;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& rec : cert.entries) {
        nlohmann::json e;
        e["t"] = rec.index;
        e["primitive_part"] = rec.primitive_part.get_str();
        if (rec.witness_prime) e["witness_prime"] = rec.witness_prime->get_str();
        e["status"] = to_string(rec.status);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

}  // namespace taulab
