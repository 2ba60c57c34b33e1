#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "taulab/factor.hpp"

namespace taulab::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kUsage = 2,
    kBudgetUnknown = 3,
};

/// Resolved configuration. Precedence: flags > environment (TLL_CACHE_DIR,
/// TLL_TABLE_BOUND) > config file (key=value lines) > defaults.
struct CliConfig {
    std::string cache_dir = ".taulab-cache";
    std::uint64_t table_bound = 10'000;
    FactorBudget factor_budget;
    std::string output_format = "csv";  // csv | json
    unsigned precision_bits = 128;
};

/// Entry point shared by the binary and the tests. argv excludes the
/// program name. Output goes to out/err so tests can capture it.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace taulab::cli
