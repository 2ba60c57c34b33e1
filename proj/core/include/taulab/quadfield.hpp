#pragma once

#include <cstdint>

#include <boost/multiprecision/mpfr.hpp>

#include "taulab/factor.hpp"
#include "taulab/lucas.hpp"

namespace taulab {

/// ~166-bit working precision; error bounds are stated per operation.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

Real to_real(const Int& z);

/// Trace/norm/discriminant presentation of the Frobenius roots
/// alpha, beta of x^2 - a_p x + p^(k-1).
struct QuadraticPair {
    Int trace;          // a_p
    Int norm;           // p^(k-1)
    Int discriminant;   // trace^2 - 4 norm
    std::uint64_t p = 0;
    unsigned k = 12;
};

QuadraticPair make_quadratic_pair(std::uint64_t p, unsigned k, const Int& a_p);

struct HeightValue {
    Real value;
    double error_bound = 0.0;
};

/// theta_p = arccos(a_p / (2 p^((k-1)/2))), argument clamped to [-1, 1].
/// Requires discriminant <= 0 (OutsideDeligneRange otherwise).
double sato_tate_angle(const QuadraticPair& q);

/// Exact test: with t = a_p^2 / p^(k-1) as a rational, gamma = alpha/beta
/// is a root of unity iff t in {0,1,2,3,4} (discriminant < 0), always for
/// discriminant = 0 (gamma = 1), never for discriminant > 0.
///
/// Why t in {0,1,2,3,4}: gamma + 1/gamma = t - 2 is rational, and a root
/// of unity of degree <= 2 over Q has 2cos(2 theta) in {-2,-1,0,1,2}.
bool gamma_is_root_of_unity(const QuadraticPair& q);

/// Exact quadratic number (x + y sqrt(D)) / z, gcd(x, y, z) = 1, z > 0,
/// D squarefree (y = 0 encodes a rational, D ignored).
struct QuadNumber {
    Int x;
    Int y;
    Int z = 1;
    Int D = 1;
};

/// gamma = alpha/beta = alpha^2 / p^(k-1) in lowest terms.
/// Throws DegenerateDiscriminant when alpha = beta, and
/// IncompleteFactorization if the squarefree kernel of the discriminant
/// cannot be certified within budget.
QuadNumber gamma_value(const QuadraticPair& q, const FactorBudget& budget = {});

/// h(A_p) = ((k-1)/2 - nu) log p; exact formula value, error < 2^-120.
HeightValue height_of_normalized_root(const LucasPair& pair);

/// Absolute logarithmic height via the content-1 minimal polynomial
/// a0 x^2 + a1 x + a2: h = (1/2)(log|a0| + sum log+ |root|); rationals use
/// h = log max(|num|, |den|). Error < 2^-120. Throws ZeroInput.
HeightValue height_quadratic(const QuadNumber& x);

/// 1 / (4 d (max(1, log d))^3) — the height lower bound for degree d.
double height_floor(std::uint64_t d);

/// Exact log|N_K(A^n - B^n)|: log(u_n^2 |P^2 - 4Q|) when the discriminant
/// is not a perfect square, log(|u_n| sqrt(disc)) over Q when it is.
/// Error < 2^-100.
HeightValue log_norm_difference(const LucasPair& pair, std::uint64_t n);

/// log|N_K(A^n - B^n)| / (h(A/B) [K:Q] n), where
/// h(A/B) = sum_sigma log max(|sigma A|, |sigma B|) / [K:Q].
double norm_lemma_ratio(const LucasPair& pair, std::uint64_t n);

/// (c / Q_K(AB)) * exp((1 - epsilon) hK_A n) — pure formula evaluation of
/// the conditional radical bound; c stands in for the ineffective
/// constant e^(-c1(epsilon, Delta_K)) and is always caller-supplied.
double frey_bound_general(double hK_A, const Int& QK_AB, std::uint64_t n,
                          double epsilon, double c);

/// (c / Q(a_p^2 - 4 p^(k-1))) * p^((1-eps)((k-1)/2 - nu)(n+1) + delta),
/// delta = +1 if nu != 0 else -1. Throws RootOfUnityPair; propagates
/// IncompleteFactorization from the radical.
double frey_bound_tau(std::uint64_t p, const Int& a_p, unsigned k, std::uint64_t n,
                      double epsilon, double c, const FactorBudget& budget = {});

/// The epsilon = 0, c = 1 case as an exact rational; requires the
/// exponent (k-1-2 nu)(n+1)/2 + delta to be an integer.
mpq_class frey_bound_tau_exact(std::uint64_t p, const Int& a_p, unsigned k,
                               std::uint64_t n, const FactorBudget& budget = {});

}  // namespace taulab
