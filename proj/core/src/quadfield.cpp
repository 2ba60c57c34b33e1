#include "taulab/quadfield.hpp"

#include <cmath>

namespace taulab {

namespace {

Real log_of(const Int& z) {
    if (z <= 0) throw ZeroInput();
    return log(to_real(z));
}

// Squarefree decomposition |m| = |D| * s^2 via complete factorization.
void squarefree_kernel(const Int& m, const FactorBudget& budget, Int& D, Int& s) {
    Factorization f = factorize(m, budget);
    if (!f.complete()) throw IncompleteFactorization();
    D = f.sign;
    s = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1) D *= p;
        Int ph;
        mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), e / 2);
        s *= ph;
    }
}

// h(A/B) [K:Q] = sum over embeddings of log max(|sigma A|, |sigma B|),
// by the coprime-case identity of the norm lemma.
Real pair_height_times_degree(const LucasPair& pair, unsigned& degree) {
    Int disc = pair.discriminant();
    if (disc < 0) {
        // complex conjugate roots, |A| = |B| = sqrt(Q) at both embeddings
        degree = 2;
        return log_of(pair.Q);
    }
    Real sqrt_disc = sqrt(to_real(disc));
    Real absP = to_real(abs(pair.P));
    Real max_root = (absP + sqrt_disc) / 2;  // max(|A|, |B|)
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        degree = 1;
        return log(max_root);
    }
    degree = 2;  // the conjugate embedding swaps A and B
    return 2 * log(max_root);
}

}  // namespace

Real to_real(const Int& z) {
    Real out;
    mpfr_set_z(out.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return out;
}

QuadraticPair make_quadratic_pair(std::uint64_t p, unsigned k, const Int& a_p) {
    QuadraticPair q;
    q.p = p;
    q.k = k;
    q.trace = a_p;
    mpz_ui_pow_ui(q.norm.get_mpz_t(), p, k - 1);
    q.discriminant = q.trace * q.trace - 4 * q.norm;
    return q;
}

double sato_tate_angle(const QuadraticPair& q) {
    if (q.discriminant > 0) throw OutsideDeligneRange();
    double x = mpz_get_d(q.trace.get_mpz_t()) / (2.0 * sqrt(mpz_get_d(q.norm.get_mpz_t())));
    return std::acos(std::clamp(x, -1.0, 1.0));
}

bool gamma_is_root_of_unity(const QuadraticPair& q) {
    if (q.discriminant > 0) return false;  // gamma real, |gamma| != 1
    if (q.discriminant == 0) return true;  // gamma = 1
    // t = a_p^2 / p^(k-1) in {0, 1, 2, 3} (t = 4 is the disc = 0 case)
    Int t2 = q.trace * q.trace;
    for (int m = 0; m <= 3; ++m) {
        if (t2 == m * q.norm) return true;
    }
    return false;
}

QuadNumber gamma_value(const QuadraticPair& q, const FactorBudget& budget) {
    if (q.discriminant == 0) throw DegenerateDiscriminant();
    QuadNumber g;
    if (q.trace == 0) {
        // gamma = -1
        g.x = -1;
        g.y = 0;
        g.z = 1;
        g.D = 1;
        return g;
    }
    // gamma = alpha/beta = alpha^2 / (alpha beta)
    //       = ((a^2 - 2N) + a sqrt(disc)) / (2N),  disc = D s^2
    Int s;
    squarefree_kernel(q.discriminant, budget, g.D, s);
    g.x = q.trace * q.trace - 2 * q.norm;
    g.y = q.trace * s;
    g.z = 2 * q.norm;
    Int common = gcd(gcd(g.x, g.y), g.z);
    g.x /= common;
    g.y /= common;
    g.z /= common;
    if (g.z < 0) {
        g.x = -g.x;
        g.y = -g.y;
        g.z = -g.z;
    }
    return g;
}

HeightValue height_of_normalized_root(const LucasPair& pair) {
    // h(A_p) = ((k-1)/2 - nu) log p = (1/2) log Q
    Real value = Real(pair.k - 1 - 2 * pair.nu) * log(Real(pair.p)) / 2;
    return {value, std::ldexp(1.0, -120)};
}

HeightValue height_quadratic(const QuadNumber& q) {
    if (q.x == 0 && q.y == 0) throw ZeroInput();
    const double err = std::ldexp(1.0, -120);
    if (q.y == 0) {
        Int num = abs(q.x), den = abs(q.z);
        Int common = gcd(num, den);
        num /= common;
        den /= common;
        return {log_of(num > den ? num : den), err};
    }
    // minimal polynomial of (x + y sqrt(D))/z: z^2 X^2 - 2xz X + (x^2 - y^2 D)
    Int a0 = q.z * q.z;
    Int a1 = -2 * q.x * q.z;
    Int a2 = q.x * q.x - q.y * q.y * q.D;
    Int content = gcd(gcd(a0, a1), a2);
    a0 /= content;
    a1 /= content;
    a2 /= content;

    Real h = log_of(abs(a0));
    if (q.D < 0) {
        // conjugate roots of common modulus sqrt(a2/a0)
        Real mod2 = to_real(abs(a2)) / to_real(abs(a0));
        if (mod2 > 1) h += log(mod2);  // two roots, each contributing half of log(mod2)
    } else {
        Real sd = sqrt(to_real(q.D));
        Real r1 = (to_real(q.x) + to_real(q.y) * sd) / to_real(q.z);
        Real r2 = (to_real(q.x) - to_real(q.y) * sd) / to_real(q.z);
        if (abs(r1) > 1) h += log(abs(r1));
        if (abs(r2) > 1) h += log(abs(r2));
    }
    return {h / 2, err};
}

double height_floor(std::uint64_t d) {
    if (d < 1) throw Error("degree must be >= 1");
    double logstar = std::max(1.0, std::log(static_cast<double>(d)));
    return 1.0 / (4.0 * static_cast<double>(d) * logstar * logstar * logstar);
}

HeightValue log_norm_difference(const LucasPair& pair, std::uint64_t n) {
    if (gcd(pair.P, pair.Q) != 1) throw NonCoprimePair();
    if (pair.root_of_unity) throw DegeneratePair();
    Int disc = pair.discriminant();
    Int u_n = lucas_u(pair, n);
    const double err = std::ldexp(1.0, -100);
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        // rational roots: N over Q of A^n - B^n is |u_n| * sqrt(disc)
        Int s = sqrt(disc);
        return {log_of(abs(u_n) * s), err};
    }
    return {log_of(u_n * u_n * abs(disc)), err};
}

double norm_lemma_ratio(const LucasPair& pair, std::uint64_t n) {
    if (n == 0) throw Error("norm_lemma_ratio requires n >= 1");
    unsigned degree = 0;
    Real denom = pair_height_times_degree(pair, degree) * n;
    if (denom <= 0) throw Error("h(A/B) must be positive");
    HeightValue num = log_norm_difference(pair, n);
    return static_cast<double>(num.value / denom);
}

double frey_bound_general(double hK_A, const Int& QK_AB, std::uint64_t n,
                          double epsilon, double c) {
    if (QK_AB <= 0) throw Error("Q_K(AB) must be positive");
    if (c <= 0) throw Error("c must be positive");
    return c / mpz_get_d(QK_AB.get_mpz_t()) * std::exp((1.0 - epsilon) * hK_A * n);
}

double frey_bound_tau(std::uint64_t p, const Int& a_p, unsigned k, std::uint64_t n,
                      double epsilon, double c, const FactorBudget& budget) {
    QuadraticPair q = make_quadratic_pair(p, k, a_p);
    if (gamma_is_root_of_unity(q)) throw RootOfUnityPair();
    Int rad = radical(factorize(q.discriminant, budget));
    unsigned nu = p_adic_valuation(a_p, Int(static_cast<unsigned long>(p)));
    int delta = nu != 0 ? 1 : -1;
    double exponent = (1.0 - epsilon) * ((k - 1) / 2.0 - nu) * (n + 1) + delta;
    return c / mpz_get_d(rad.get_mpz_t()) * std::exp(exponent * std::log(static_cast<double>(p)));
}

mpq_class frey_bound_tau_exact(std::uint64_t p, const Int& a_p, unsigned k,
                               std::uint64_t n, const FactorBudget& budget) {
    QuadraticPair q = make_quadratic_pair(p, k, a_p);
    if (gamma_is_root_of_unity(q)) throw RootOfUnityPair();
    Int rad = radical(factorize(q.discriminant, budget));
    unsigned nu = p_adic_valuation(a_p, Int(static_cast<unsigned long>(p)));
    int delta = nu != 0 ? 1 : -1;
    // exponent = (k-1-2nu)(n+1)/2 + delta, at epsilon = 0
    Int twice = Int(k - 1 - 2 * nu) * Int(static_cast<unsigned long>(n + 1));
    if (twice % 2 != 0) throw Error("exponent is not an integer; no exact rational value");
    long e = mpz_get_si(Int(twice / 2 + delta).get_mpz_t());
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e >= 0 ? e : -e));
    mpq_class out = e >= 0 ? mpq_class(pe) / mpq_class(rad) : mpq_class(1) / mpq_class(pe * rad);
    out.canonicalize();
    return out;
}

}  // namespace taulab
