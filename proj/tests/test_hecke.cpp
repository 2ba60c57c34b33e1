#include <doctest.h>

#include "taulab/hecke.hpp"
#include "taulab/tau.hpp"

using namespace taulab;

namespace {

const char* kDelta = R"({
  "label": "delta",
  "weight": 12,
  "level": 1,
  "primes": [{"p": 2, "ap": "-24"}, {"p": 3, "ap": "252"}, {"p": 5, "ap": "4830"}]
})";

}  // namespace

TEST_CASE("ingest the delta form") {
    HeckeEigenData d = parse_hecke_eigen_data(kDelta);
    CHECK(d.label == "delta");
    CHECK(d.weight == 12);
    CHECK(d.level == 1);
    CHECK(d.prime_values.at(2) == -24);
    CHECK(d.petersson_violations.empty());
}

TEST_CASE("hecke recurrence matches tau at weight 12") {
    HeckeEigenData d = parse_hecke_eigen_data(kDelta);
    CHECK(hecke_prime_power(d, 2, 0) == 1);
    CHECK(hecke_prime_power(d, 2, 2) == -1472);
    CHECK(hecke_prime_power(d, 2, 3) == 84480);
    for (unsigned e = 0; e < 12; ++e) {
        CHECK(hecke_prime_power(d, 3, e) == tau_prime_power(Int(3), e, Int(252)));
    }
}

TEST_CASE("weight 16 example: a_2 = 216, e = 2") {
    HeckeEigenData d = parse_hecke_eigen_data(
        R"({"label":"E4Delta","weight":16,"level":1,"primes":[{"p":2,"ap":216}]})");
    CHECK(hecke_prime_power(d, 2, 2) == 216 * 216 - (1 << 15));  // 13888
}

TEST_CASE("unknown prime") {
    HeckeEigenData d = parse_hecke_eigen_data(kDelta);
    CHECK_THROWS_AS(hecke_prime_power(d, 7, 1), UnknownPrime);
}

TEST_CASE("ingestion validation") {
    CHECK_THROWS_AS(parse_hecke_eigen_data("not json"), FormatViolation);
    CHECK_THROWS_AS(parse_hecke_eigen_data(R"({"weight":11,"level":1,"primes":[]})"),
                    FormatViolation);
    CHECK_THROWS_AS(parse_hecke_eigen_data(R"({"weight":12,"level":1,"primes":[]})")
                        .prime_values.at(2),
                    std::out_of_range);
    // prime dividing the level is refused
    CHECK_THROWS_AS(parse_hecke_eigen_data(
                        R"({"weight":12,"level":4,"primes":[{"p":2,"ap":1}]})"),
                    FormatViolation);
    // composite key is refused
    CHECK_THROWS_AS(parse_hecke_eigen_data(
                        R"({"weight":12,"level":1,"primes":[{"p":6,"ap":1}]})"),
                    FormatViolation);
}

TEST_CASE("Ramanujan-Petersson violations flagged, not fatal") {
    HeckeEigenData d = parse_hecke_eigen_data(
        R"({"weight":12,"level":1,"primes":[{"p":2,"ap":"99999"}]})");
    CHECK(d.petersson_violations.count(2) == 1);
    CHECK(hecke_prime_power(d, 2, 1) == 99999);
}
