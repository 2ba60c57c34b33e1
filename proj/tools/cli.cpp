#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "taulab/experiments.hpp"
#include "taulab/hecke.hpp"
#include "taulab/lucas.hpp"
#include "taulab/quadfield.hpp"
#include "taulab/tau.hpp"

namespace taulab::cli {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

// key = value lines; '#' comments; quotes around values optional.
void apply_config_file(const std::string& path, CliConfig& cfg) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (key == "cache_dir") cfg.cache_dir = value;
        else if (key == "table_bound") cfg.table_bound = std::stoull(value);
        else if (key == "output_format") cfg.output_format = value;
        else if (key == "precision_bits") cfg.precision_bits = std::stoul(value);
        else if (key == "trial_division_bound") cfg.factor_budget.trial_division_bound = std::stoull(value);
        else if (key == "rho_iteration_cap") cfg.factor_budget.rho_iteration_cap = std::stoull(value);
        else if (key == "wall_clock_cap_ms") cfg.factor_budget.wall_clock_cap_ms = std::stoull(value);
    }
}

void apply_environment(CliConfig& cfg) {
    if (const char* v = std::getenv("TLL_CACHE_DIR")) cfg.cache_dir = v;
    if (const char* v = std::getenv("TLL_TABLE_BOUND")) cfg.table_bound = std::stoull(v);
}

std::string table_path(const CliConfig& cfg, std::uint64_t bound) {
    return (fs::path(cfg.cache_dir) / ("tau_" + std::to_string(bound) + ".tbl")).string();
}

// Build-or-reuse; the second invocation with the same bound loads the cache.
TauTable cached_table(const CliConfig& cfg, std::uint64_t bound, bool* reused = nullptr) {
    fs::create_directories(cfg.cache_dir);
    std::string path = table_path(cfg, bound);
    if (fs::exists(path)) {
        try {
            TauTable t = load_table(path);
            if (t.bound == bound) {
                if (reused) *reused = true;
                return t;
            }
        } catch (const Error&) {
            // corrupt cache entry: rebuild below
        }
    }
    TauTable t = build_tau_table(bound);
    store_table(t, path);
    if (reused) *reused = false;
    return t;
}

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text, std::ostream& fallback) const {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoFailure("cannot open " + path);
        f << text;
    }
};

void emit_report(const Report& rep, const CliConfig& cfg, const Output& out,
                 std::ostream& stdout_stream) {
    out.write(cfg.output_format == "json" ? report_to_json(rep) : report_to_csv(rep),
              stdout_stream);
}

int report_exit(const Report& rep) {
    switch (rep.overall()) {
        case RowStatus::Pass: return kPass;
        case RowStatus::Fail: return kFail;
        case RowStatus::Unknown: return kBudgetUnknown;
    }
    return kFail;
}

// tau(p) from the cached table when --ap is not supplied (weight 12 only).
Int resolve_ap(const CliConfig& cfg, std::uint64_t p, unsigned k, const std::string& ap_str) {
    if (!ap_str.empty()) return Int(ap_str);
    if (k != 12) throw Error("--ap is required for weight != 12");
    std::uint64_t bound = std::max(cfg.table_bound, p);
    return cached_table(cfg, bound).at(p);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;

    // --config must be honored before regular parsing
    std::string config_path = "tau-lucas-lab.toml";
    for (std::size_t i = 0; i + 1 < argv.size(); ++i) {
        if (argv[i] == "--config") config_path = argv[i + 1];
    }
    apply_config_file(config_path, cfg);
    apply_environment(cfg);

    CLI::App app{"tau-lucas-lab: Fourier coefficients, Lucas pairs, primitive divisors"};
    app.require_subcommand(1);
    std::string config_flag;
    Output output;
    app.add_option("--config", config_flag, "config file (key=value lines)");
    app.add_option("--cache-dir", cfg.cache_dir, "table cache directory");
    app.add_option("--table-bound", cfg.table_bound, "default tau table bound");
    app.add_option("--format", cfg.output_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision-bits", cfg.precision_bits, "height precision (>= 64)")
        ->check(CLI::Range(64u, 4096u));
    app.add_option("--output", output.path, "write results to this file instead of stdout");
    app.add_option("--trial-bound", cfg.factor_budget.trial_division_bound);
    app.add_option("--rho-cap", cfg.factor_budget.rho_iteration_cap);
    app.add_option("--wall-cap-ms", cfg.factor_budget.wall_clock_cap_ms);

    // shared pair flags
    std::uint64_t p = 2, n = 1, t_bound = 0, pmax = 50, nmax = 100, bins = 20, r = 10,
                  threshold = 30;
    unsigned k = 12;
    std::string ap_str;
    std::uint64_t value_n = 1;
    double epsilon = 0.0, c = 1.0;
    std::vector<std::uint64_t> points{20, 50, 100, 200};

    auto add_pair_flags = [&](CLI::App* cmd) {
        cmd->add_option("-p,--prime", p, "prime p")->required();
        cmd->add_option("-k,--weight", k, "even weight (default 12)");
        cmd->add_option("--ap", ap_str, "a_f(p) as a decimal string (default: tau(p))");
    };

    auto* tau_cmd = app.add_subcommand("tau", "tau table and values");
    auto* tau_table_cmd = tau_cmd->add_subcommand("table", "build or reuse a cached tau table");
    tau_table_cmd->add_option("--bound", t_bound, "table bound")->required();
    auto* tau_value_cmd = tau_cmd->add_subcommand("value", "print tau(n)");
    tau_value_cmd->add_option("n", value_n, "index")->required();

    auto* lucas_cmd = app.add_subcommand("lucas", "Lucas pair operations");
    auto* lucas_pair_cmd = lucas_cmd->add_subcommand("pair", "normalized pair parameters");
    add_pair_flags(lucas_pair_cmd);
    auto* lucas_u_cmd = lucas_cmd->add_subcommand("u", "print u_n");
    add_pair_flags(lucas_u_cmd);
    lucas_u_cmd->add_option("-n,--index", n, "index")->required();
    auto* lucas_prim_cmd = lucas_cmd->add_subcommand("primitive", "primitive part of u_n");
    add_pair_flags(lucas_prim_cmd);
    lucas_prim_cmd->add_option("-n,--index", n, "index")->required();

    auto* omega_cmd = app.add_subcommand("omega-bound", "certified omega lower bound for u_n");
    add_pair_flags(omega_cmd);
    omega_cmd->add_option("-n,--index", n, "index")->required();
    omega_cmd->add_option("--threshold", threshold, "primitive-divisor threshold (default 30)");

    auto* verify_cmd = app.add_subcommand("verify", "identity verification runs");
    auto* verify_val_cmd = verify_cmd->add_subcommand("valuations", "valuation identity sweep");
    verify_val_cmd->add_option("--pmax", pmax, "largest prime");
    verify_val_cmd->add_option("--nmax", nmax, "largest exponent");
    auto* verify_norm_cmd = verify_cmd->add_subcommand("norm-lemma", "norm growth ratios");
    add_pair_flags(verify_norm_cmd);
    verify_norm_cmd->add_option("--points", points, "indices to sample");

    auto* st_cmd = app.add_subcommand("satotate", "Sato-Tate histogram report");
    st_cmd->add_option("--bound", t_bound, "table bound")->required();
    st_cmd->add_option("--bins", bins, "histogram bins");

    auto* rad_cmd = app.add_subcommand("radical-report", "radical growth vs conditional bound");
    add_pair_flags(rad_cmd);
    rad_cmd->add_option("--nmax", nmax, "largest exponent")->required();
    rad_cmd->add_option("--epsilon", epsilon, "epsilon in (0,1)");
    rad_cmd->add_option("--c", c, "ineffective-constant stand-in (default 1)");

    auto* thm_cmd = app.add_subcommand("theorem-tau", "primorial-index omega certificate");
    add_pair_flags(thm_cmd);
    thm_cmd->add_option("-r,--primorial", r, "primorial cutoff")->required();
    thm_cmd->add_option("--threshold", threshold, "primitive-divisor threshold");

    // let global flags appear after subcommands
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* subsub : sub->get_subcommands({})) subsub->fallthrough();
    }

    std::vector<const char*> cargs;
    cargs.push_back("taulab");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (tau_table_cmd->parsed()) {
            bool reused = false;
            cached_table(cfg, t_bound, &reused);
            out << table_path(cfg, t_bound) << (reused ? " (cached)" : "") << "\n";
            return kPass;
        }
        if (tau_value_cmd->parsed()) {
            TauTable table = cached_table(cfg, std::max(cfg.table_bound, value_n));
            out << tau(value_n, table).get_str() << "\n";
            return kPass;
        }
        if (lucas_pair_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            nlohmann::json j{{"p", pair.p},       {"k", pair.k},
                             {"ap", pair.a_p.get_str()}, {"nu", pair.nu},
                             {"P", pair.P.get_str()},    {"Q", pair.Q.get_str()},
                             {"root_of_unity", pair.root_of_unity}};
            output.write(j.dump(2) + "\n", out);
            return kPass;
        }
        if (lucas_u_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            out << lucas_u(pair, n).get_str() << "\n";
            return kPass;
        }
        if (lucas_prim_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            PrimitiveDivisorRecord rec = primitive_part(pair, n, cfg.factor_budget);
            nlohmann::json j{{"n", rec.index},
                             {"primitive_part", rec.primitive_part.get_str()},
                             {"status", to_string(rec.status)}};
            if (rec.witness_prime) j["witness_prime"] = rec.witness_prime->get_str();
            output.write(j.dump(2) + "\n", out);
            return rec.status == PrimitiveStatus::Unknown ? kBudgetUnknown : kPass;
        }
        if (omega_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            OmegaCertificate cert =
                certified_omega_lower_bound(pair, n, threshold, cfg.factor_budget);
            output.write(certificate_to_json(pair, cert) + "\n", out);
            if (cert.has_unknown) return kBudgetUnknown;
            return cert.certified >= cert.a_priori ? kPass : kFail;
        }
        if (verify_val_cmd->parsed()) {
            TauTable table = cached_table(cfg, std::max(cfg.table_bound, pmax));
            Report rep = valuation_sweep(table, pmax, nmax);
            emit_report(rep, cfg, output, out);
            return report_exit(rep);
        }
        if (verify_norm_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            Report rep = norm_lemma_experiment(pair, points);
            emit_report(rep, cfg, output, out);
            return report_exit(rep);
        }
        if (st_cmd->parsed()) {
            TauTable table = cached_table(cfg, t_bound);
            Report rep = sato_tate_report(table, static_cast<unsigned>(bins));
            emit_report(rep, cfg, output, out);
            return report_exit(rep);
        }
        if (rad_cmd->parsed()) {
            LucasPair pair = normalize_pair(p, k, resolve_ap(cfg, p, k, ap_str));
            Report rep = radical_growth_report(pair, nmax, epsilon, c, cfg.factor_budget);
            emit_report(rep, cfg, output, out);
            return report_exit(rep);
        }
        if (thm_cmd->parsed()) {
            Int ap = resolve_ap(cfg, p, k, ap_str);
            Report rep = theorem_tau_experiment(p, k, ap, r, cfg.factor_budget, 2310, threshold);
            emit_report(rep, cfg, output, out);
            return report_exit(rep);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
    err << app.help();
    return kUsage;
}

}  // namespace taulab::cli
