#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using taulab::cli::run;

namespace {

struct Sandbox {
    fs::path dir;

    Sandbox() : dir(fs::temp_directory_path() / ("taulab_cli_" + std::to_string(rand()))) {
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }

    std::string cache() const { return (dir / "cache").string(); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> argv) {
    std::ostringstream out, err;
    int code = run(argv, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tau value") {
    Sandbox sb;
    Run r = invoke({"tau", "value", "2", "--cache-dir", sb.cache(), "--table-bound", "100"});
    CHECK(r.code == taulab::cli::kPass);
    CHECK(r.out == "-24\n");
    Run r6 = invoke({"tau", "value", "6", "--cache-dir", sb.cache(), "--table-bound", "100"});
    CHECK(r6.out == "-6048\n");
}

TEST_CASE("tau table caches on second build") {
    Sandbox sb;
    Run first = invoke({"tau", "table", "--bound", "200", "--cache-dir", sb.cache()});
    CHECK(first.code == taulab::cli::kPass);
    CHECK(first.out.find("tau_200.tbl") != std::string::npos);
    CHECK(first.out.find("(cached)") == std::string::npos);
    Run second = invoke({"tau", "table", "--bound", "200", "--cache-dir", sb.cache()});
    CHECK(second.code == taulab::cli::kPass);
    CHECK(second.out.find("(cached)") != std::string::npos);
}

TEST_CASE("lucas pair resolves tau(p) from the table") {
    Sandbox sb;
    Run r = invoke({"lucas", "pair", "-p", "2", "--cache-dir", sb.cache(),
                    "--table-bound", "100"});
    REQUIRE(r.code == taulab::cli::kPass);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["ap"] == "-24");
    CHECK(j["nu"] == 3);
    CHECK(j["P"] == "-3");
    CHECK(j["Q"] == "32");
    CHECK(j["root_of_unity"] == false);
}

TEST_CASE("lucas u and primitive") {
    Sandbox sb;
    Run u = invoke({"lucas", "u", "-p", "2", "-n", "4", "--cache-dir", sb.cache(),
                    "--table-bound", "100"});
    CHECK(u.code == taulab::cli::kPass);
    CHECK(u.out == "165\n");

    Run prim = invoke({"lucas", "primitive", "-p", "2", "-n", "3", "--cache-dir", sb.cache(),
                       "--table-bound", "100"});
    REQUIRE(prim.code == taulab::cli::kPass);
    nlohmann::json j = nlohmann::json::parse(prim.out);
    CHECK(j["primitive_part"] == "23");
    CHECK(j["status"] == "Found");
    CHECK(j["witness_prime"] == "23");
}

TEST_CASE("omega-bound certificate") {
    Sandbox sb;
    Run r = invoke({"omega-bound", "-p", "2", "-n", "210", "--cache-dir", sb.cache(),
                    "--table-bound", "100"});
    REQUIRE(r.code == taulab::cli::kPass);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["a_priori"] == 5);
    CHECK(j["certified"].get<unsigned>() >= 5);
}

TEST_CASE("explicit --ap bypasses the table") {
    Sandbox sb;
    Run r = invoke({"lucas", "pair", "-p", "5", "--ap", "4830", "--cache-dir", sb.cache()});
    REQUIRE(r.code == taulab::cli::kPass);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["nu"] == 1);
    CHECK(j["P"] == "966");
    CHECK(fs::exists(sb.cache()) == false);  // no table was needed
}

TEST_CASE("verify valuations report") {
    Sandbox sb;
    Run csv = invoke({"verify", "valuations", "--pmax", "30", "--nmax", "20",
                      "--cache-dir", sb.cache(), "--table-bound", "50"});
    CHECK(csv.code == taulab::cli::kPass);
    CHECK(csv.out.rfind("experiment,p,n_max,", 0) == 0);
    CHECK(csv.out.find("valuation-sweep") != std::string::npos);

    Run json = invoke({"verify", "valuations", "--pmax", "30", "--nmax", "20",
                       "--cache-dir", sb.cache(), "--table-bound", "50",
                       "--format", "json"});
    CHECK(json.code == taulab::cli::kPass);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["schema"] == "report_v1");
}

TEST_CASE("theorem-tau at the primorial 210") {
    Sandbox sb;
    Run r = invoke({"theorem-tau", "-p", "2", "-r", "7", "--cache-dir", sb.cache(),
                    "--table-bound", "100"});
    CHECK(r.code == taulab::cli::kPass);
    CHECK(r.out.find("210") != std::string::npos);
}

TEST_CASE("--output writes to a file, not stdout") {
    Sandbox sb;
    std::string path = sb.file("pair.json");
    Run r = invoke({"lucas", "pair", "-p", "2", "--ap", "-24", "--output", path});
    REQUIRE(r.code == taulab::cli::kPass);
    CHECK(r.out.empty());
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["Q"] == "32");
}

TEST_CASE("usage errors exit with 2") {
    Run unknown = invoke({"no-such-command"});
    CHECK(unknown.code == taulab::cli::kUsage);
    CHECK(!unknown.err.empty());
    Run missing = invoke({"lucas", "u", "-p", "2"});  // -n required
    CHECK(missing.code == taulab::cli::kUsage);
    Run badfmt = invoke({"tau", "value", "2", "--format", "xml"});
    CHECK(badfmt.code == taulab::cli::kUsage);
}

TEST_CASE("domain errors exit with 1") {
    Sandbox sb;
    Run notprime = invoke({"lucas", "pair", "-p", "4", "--ap", "10",
                           "--cache-dir", sb.cache()});
    CHECK(notprime.code == taulab::cli::kFail);
    CHECK(notprime.err.find("error:") != std::string::npos);
    // root-of-unity eigenvalue is refused by normalization
    Run rou = invoke({"lucas", "pair", "-p", "2", "--ap", "64", "--cache-dir", sb.cache()});
    CHECK(rou.code == taulab::cli::kFail);
}

TEST_CASE("help exits cleanly") {
    Run r = invoke({"--help"});
    CHECK(r.code == taulab::cli::kPass);
    CHECK(r.out.find("tau-lucas-lab") != std::string::npos);
}

TEST_CASE("config file, environment, and flags precedence") {
    Sandbox sb;
    std::string cfg_path = sb.file("cfg.toml");
    {
        std::ofstream cfg(cfg_path);
        cfg << "# test configuration\n";
        cfg << "cache_dir = \"" << sb.cache() << "\"\n";
        cfg << "table_bound = 150\n";
    }

    SUBCASE("config file applies") {
        Run r = invoke({"tau", "value", "2", "--config", cfg_path});
        CHECK(r.code == taulab::cli::kPass);
        CHECK(fs::exists(fs::path(sb.cache()) / "tau_150.tbl"));
    }

    SUBCASE("environment overrides the config file") {
        setenv("TLL_TABLE_BOUND", "120", 1);
        Run r = invoke({"tau", "value", "2", "--config", cfg_path});
        unsetenv("TLL_TABLE_BOUND");
        CHECK(r.code == taulab::cli::kPass);
        CHECK(fs::exists(fs::path(sb.cache()) / "tau_120.tbl"));
        CHECK(!fs::exists(fs::path(sb.cache()) / "tau_150.tbl"));
    }

    SUBCASE("flags override the environment") {
        setenv("TLL_TABLE_BOUND", "120", 1);
        setenv("TLL_CACHE_DIR", sb.cache().c_str(), 1);
        Run r = invoke({"tau", "value", "2", "--table-bound", "80"});
        unsetenv("TLL_TABLE_BOUND");
        unsetenv("TLL_CACHE_DIR");
        CHECK(r.code == taulab::cli::kPass);
        CHECK(fs::exists(fs::path(sb.cache()) / "tau_80.tbl"));
        CHECK(!fs::exists(fs::path(sb.cache()) / "tau_120.tbl"));
    }
}
