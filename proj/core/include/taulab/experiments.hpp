#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "taulab/factor.hpp"
#include "taulab/lucas.hpp"
#include "taulab/quadfield.hpp"
#include "taulab/tau.hpp"

namespace taulab {

enum class RowStatus { Pass, Fail, Unknown };

std::string to_string(RowStatus s);

struct ReportRow {
    std::string experiment;
    std::map<std::string, std::string> inputs;   // decimal strings
    std::map<std::string, std::string> outputs;
    RowStatus status = RowStatus::Pass;
};

/// One experiment run: fixed column schema plus rows. CSV/JSON emission is
/// deterministic given identical rows.
struct Report {
    std::string experiment;
    std::vector<std::string> input_columns;
    std::vector<std::string> output_columns;
    std::vector<ReportRow> rows;

    RowStatus overall() const;
};

/// RFC-4180 CSV: header from the schema, LF line endings.
std::string report_to_csv(const Report& report);

/// {"schema": "report_v1", "experiment": ..., "rows": [...]}.
std::string report_to_json(const Report& report);

/// n = primorial(r); a priori and certified omega lower bounds for
/// a_f(p^(n-1)) at index n, plus the 2^(log n / log log n) comparison
/// column (labeled, never pass/fail). Certified parts are re-checked to
/// divide the target coefficient exactly.
Report theorem_tau_experiment(std::uint64_t p, unsigned k, const Int& a_p,
                              std::uint64_t r, const FactorBudget& budget = {},
                              std::uint64_t primorial_cap = 2310,
                              std::uint64_t threshold = 30);

/// Empirical Sato-Tate angles for all primes <= table.bound against the
/// model density (2/pi) sin^2(theta): per-bin masses and the sup-norm CDF
/// discrepancy (on the last row).
Report sato_tate_report(const TauTable& table, unsigned bins);

/// For each prime p <= p_max with tau(p) != 0: nu_{tau,p}, the valuation
/// identity nu_p(tau(p^n)) = n nu checked to n_max, and the nu <= 5
/// Deligne consequence.
Report valuation_sweep(const TauTable& table, std::uint64_t p_max, std::uint64_t n_max);

/// Per n: log Q(a_f(p^n)), the omega log omega comparison, and the
/// conditional Frey lower bound. Incomplete factorizations degrade to
/// certified lower bounds and are flagged Unknown.
Report radical_growth_report(const LucasPair& pair, std::uint64_t n_max,
                             double epsilon, double c, const FactorBudget& budget = {});

/// Table of (n, ratio, |ratio-1| n / log(n+1)) for the norm-growth lemma.
Report norm_lemma_experiment(const LucasPair& pair, const std::vector<std::uint64_t>& n_points);

}  // namespace taulab
