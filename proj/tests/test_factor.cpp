#include <doctest.h>

#include <numeric>
#include <random>

#include "taulab/factor.hpp"

using namespace taulab;

namespace {

// independent oracle: plain trial division, small inputs only
bool trial_division_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> enumerate_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace

TEST_CASE("is_prime basics") {
    CHECK(is_prime(Int(2)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(0)));
    CHECK_FALSE(is_prime(Int(84480)));  // 2^9 * 165
    CHECK(is_prime(Int(-7)));           // primality of |n|
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
    for (std::uint64_t n = 0; n < 20000; ++n) {
        CAPTURE(n);
        REQUIRE(is_prime(Int(static_cast<unsigned long>(n))) == trial_division_is_prime(n));
    }
}

TEST_CASE("is_prime on large inputs") {
    // 2^89 - 1 is a Mersenne prime
    Int m89 = (Int(1) << 89) - 1;
    CHECK(is_prime(m89));
    CHECK_FALSE(is_prime(m89 * ((Int(1) << 61) - 1)));
}

TEST_CASE("factorize tau(4) = -1472") {
    Factorization f = factorize(Int(-1472));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned>{2, 6});
    CHECK(f.factors[1] == std::pair<Int, unsigned>{23, 1});
    CHECK(f.complete());
    CHECK(f.reconstruct() == -1472);
}

TEST_CASE("factorize units and errors") {
    Factorization one = factorize(Int(1));
    CHECK(one.sign == 1);
    CHECK(one.factors.empty());
    CHECK(one.complete());
    CHECK_THROWS_AS(factorize(Int(0)), ZeroInput);
}

TEST_CASE("factorize 84480") {
    Factorization f = factorize(Int(84480));
    std::vector<std::pair<Int, unsigned>> expected{{2, 9}, {3, 1}, {5, 1}, {11, 1}};
    CHECK(f.factors == expected);
}

TEST_CASE("factorize needs rho beyond the trial bound") {
    // two 12-digit primes, far beyond trial division
    Int a("999999000001"), b("999999999989");
    Factorization f = factorize(a * b, FactorBudget{10'000, 50'000'000, 120'000});
    REQUIRE(f.complete());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == a);
    CHECK(f.factors[1].first == b);
}

TEST_CASE("budget exhaustion reports an honest cofactor") {
    Int a("618970019642690137449562111");   // 2^89 - 1
    Int b("162259276829213363391578010288127");  // 2^107 - 1
    Factorization f = factorize(a * b * 12, FactorBudget{1000, 100, 60'000});
    CHECK_FALSE(f.complete());
    CHECK(f.reconstruct() == a * b * 12);
    CHECK_FALSE(omega(f).complete);
}

TEST_CASE("reconstruction holds on random inputs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        std::int64_t n = static_cast<std::int64_t>(rng() % 2'000'000'000) - 1'000'000'000;
        if (n == 0) continue;
        Factorization f = factorize(Int(static_cast<long>(n)));
        CAPTURE(n);
        REQUIRE(f.complete());
        REQUIRE(f.reconstruct() == n);
        for (std::size_t j = 0; j + 1 < f.factors.size(); ++j) {
            REQUIRE(f.factors[j].first < f.factors[j + 1].first);
        }
        for (const auto& [p, e] : f.factors) {
            REQUIRE(is_prime(p));
            REQUIRE(e >= 1);
        }
    }
}

TEST_CASE("omega") {
    CHECK(omega(factorize(Int(1))).count == 0);
    CHECK(omega(factorize(Int(-1))).count == 0);
    CHECK(omega(factorize(Int(12))).count == 2);
    CHECK(omega(factorize(Int(-1472))).count == 2);
}

TEST_CASE("radical") {
    CHECK(radical(factorize(Int(12))) == 6);
    CHECK(radical(factorize(Int(-1472))) == 46);
    CHECK(radical(factorize(Int(1))) == 1);

    SUBCASE("divides and is squarefree") {
        for (long n : {360, 97, 1024, 9699690, 123456}) {
            Factorization f = factorize(Int(n));
            Int r = radical(f);
            CHECK(Int(n) % r == 0);
            Factorization rf = factorize(r);
            for (const auto& [p, e] : rf.factors) CHECK(e == 1);
            CHECK(omega(rf).count == omega(f).count);
        }
    }

    SUBCASE("incomplete factorization throws") {
        Int a("618970019642690137449562111");
        Int b("162259276829213363391578010288127");
        Factorization f = factorize(a * b, FactorBudget{1000, 100, 60'000});
        CHECK_THROWS_AS(radical(f), IncompleteFactorization);
        CHECK(known_radical(f) == 1);  // nothing certified
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(210) == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35,
                                                      42, 70, 105, 210});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(97) == std::vector<std::uint64_t>{1, 97});
    CHECK_THROWS_AS(divisors(0), ZeroInput);
    CHECK_THROWS_AS(divisors(std::uint64_t(1) << 63), Overflow);

    SUBCASE("matches enumeration oracle on a grid") {
        for (std::uint64_t n = 1; n <= 2000; n += 7) {
            CAPTURE(n);
            REQUIRE(divisors(n) == enumerate_divisors(n));
        }
    }

    SUBCASE("d(n) multiplicative over coprime pairs") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 100; ++i) {
            std::uint64_t m = rng() % 1000 + 1, n = rng() % 1000 + 1;
            if (std::gcd(m, n) != 1) continue;
            CHECK(divisors(m * n).size() == divisors(m).size() * divisors(n).size());
        }
    }
}

TEST_CASE("primorial") {
    CHECK(primorial(10) == 210);
    CHECK(primorial(2) == 2);
    CHECK(primorial(13) == 30030);
    CHECK_THROWS_AS(primorial(1), Error);
}

TEST_CASE("p_adic_valuation") {
    CHECK(p_adic_valuation(Int(-24), Int(2)) == 3);
    CHECK(p_adic_valuation(Int(-24), Int(5)) == 0);
    CHECK(p_adic_valuation(Int(84480), Int(2)) == 9);
    CHECK_THROWS_AS(p_adic_valuation(Int(0), Int(2)), ZeroInput);
    CHECK_THROWS_AS(p_adic_valuation(Int(24), Int(4)), NotPrime);

    SUBCASE("additive over products") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            long m = static_cast<long>(rng() % 100000) + 1;
            long n = static_cast<long>(rng() % 100000) + 1;
            for (long p : {2L, 3L, 7L}) {
                CHECK(p_adic_valuation(Int(m) * Int(n), Int(p)) ==
                      p_adic_valuation(Int(m), Int(p)) + p_adic_valuation(Int(n), Int(p)));
            }
        }
    }
}
