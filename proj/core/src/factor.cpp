#include "taulab/factor.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace taulab {

namespace {

using Clock = std::chrono::steady_clock;

// n < 3.3e24 is deterministic for the first 13 prime bases (Sorenson-Webster).
const Int kDeterministicLimit("3317044064679887385961981");

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                     37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                     83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
                                     137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                     191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
                                     241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
                                     307, 311};

bool miller_rabin(const Int& n, const Int& base) {
    // n odd, > 2; base reduced mod n
    Int a = base % n;
    if (a == 0) return true;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

struct Deadline {
    Clock::time_point end;
    bool expired() const { return Clock::now() >= end; }
};

// Brent's variant; returns a nontrivial factor of composite odd n, or 0 when
// the caps run out. Deterministic parameter schedule.
Int pollard_brent(const Int& n, std::uint64_t iteration_cap, const Deadline& deadline) {
    for (unsigned long c = 1; c <= 32; ++c) {
        Int y = 2, q = 1, g = 1, x, ys;
        std::uint64_t r = 1, iters = 0;
        const std::uint64_t batch = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = (y * y + c) % n;
            }
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                g = gcd(q, n);
                k += lim;
                iters += lim;
                if (iters > iteration_cap || deadline.expired()) return 0;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                g = gcd(diff, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle hit a trivial gcd; retry with the next polynomial
    }
    return 0;
}

// Fully resolve m (no small factors left) into primes where possible.
void resolve(const Int& m, const FactorBudget& budget, const Deadline& deadline,
             std::map<Int, unsigned>& primes, Int& cofactor) {
    if (m == 1) return;
    if (is_prime(m)) {
        primes[m] += 1;
        return;
    }
    if (deadline.expired()) {
        cofactor *= m;
        return;
    }
    Int d = pollard_brent(m, budget.rho_iteration_cap, deadline);
    if (d == 0 || d == 1 || d == m) {
        cofactor *= m;
        return;
    }
    resolve(d, budget, deadline, primes, cofactor);
    resolve(m / d, budget, deadline, primes, cofactor);
}

}  // namespace

Int Factorization::reconstruct() const {
    Int out = cofactor;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        out *= pe;
    }
    return sign < 0 ? Int(-out) : out;
}

bool is_prime(const Int& n) {
    Int m = abs(n);
    if (m < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (m == p) return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
    unsigned rounds = m < kDeterministicLimit ? 13 : 64;
    for (unsigned i = 0; i < rounds; ++i) {
        if (!miller_rabin(m, Int(kSmallPrimes[i]))) return false;
    }
    return true;
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw ZeroInput();
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Int m = abs(n);

    Deadline deadline{Clock::now() + std::chrono::milliseconds(budget.wall_clock_cap_ms)};
    std::map<Int, unsigned> primes;

    // trial division: 2, then odd candidates up to the budget bound
    auto strip = [&](unsigned long d) {
        unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(d).get_mpz_t());
        if (e > 0) primes[Int(d)] += static_cast<unsigned>(e);
    };
    strip(2);
    strip(3);
    for (unsigned long d = 5; d <= budget.trial_division_bound && Int(d) * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1 && m <= Int(budget.trial_division_bound) * budget.trial_division_bound) {
        // no factor below sqrt(m): m is prime
        primes[m] += 1;
        m = 1;
    }

    Int cofactor = 1;
    if (m > 1) resolve(m, budget, deadline, primes, cofactor);

    out.factors.assign(primes.begin(), primes.end());
    out.cofactor = cofactor;
    return out;
}

OmegaResult omega(const Factorization& f) {
    return {static_cast<unsigned>(f.factors.size()), f.complete()};
}

Int radical(const Factorization& f) {
    if (!f.complete()) throw IncompleteFactorization();
    return known_radical(f);
}

Int known_radical(const Factorization& f) {
    Int r = 1;
    for (const auto& [p, e] : f.factors) r *= p;
    return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw ZeroInput();
    if (n > static_cast<std::uint64_t>(INT64_MAX)) throw Overflow("divisors index > 2^63");
    // indices in practice are small; an ample internal budget keeps this total
    FactorBudget budget{1'000'000, 100'000'000, 600'000};
    Factorization f = factorize(Int(static_cast<unsigned long>(n)), budget);
    if (!f.complete()) throw IncompleteFactorization();
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::uint64_t pu = mpz_get_ui(p.get_mpz_t());
        std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= pu;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int primorial(std::uint64_t r) {
    if (r < 2) throw Error("primorial requires r >= 2");
    Int out = 1;
    for (std::uint64_t q : primes_up_to(r)) out *= static_cast<unsigned long>(q);
    return out;
}

unsigned p_adic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw ZeroInput();
    if (!is_prime(p)) throw NotPrime(p.get_str());
    Int rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

}  // namespace taulab
