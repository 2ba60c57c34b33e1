#include "taulab/hecke.hpp"

#include <json.hpp>

namespace taulab {

namespace {

Int json_int(const nlohmann::json& v, const char* field) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    throw FormatViolation(std::string(field) + " must be an integer or decimal string");
}

}  // namespace

HeckeEigenData parse_hecke_eigen_data(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatViolation(std::string("invalid JSON: ") + e.what());
    }
    HeckeEigenData data;
    data.label = doc.value("label", std::string{});
    if (!doc.contains("weight") || !doc.contains("level") || !doc.contains("primes")) {
        throw FormatViolation("expected fields: weight, level, primes");
    }
    Int w = json_int(doc["weight"], "weight");
    Int lv = json_int(doc["level"], "level");
    if (w < 12 || w % 2 != 0) throw FormatViolation("weight must be even and >= 12");
    if (lv < 1) throw FormatViolation("level must be positive");
    data.weight = static_cast<unsigned>(w.get_ui());
    data.level = lv.get_ui();

    Int rp_norm;  // p^(k-1)
    for (const auto& entry : doc["primes"]) {
        Int p = json_int(entry.at("p"), "p");
        Int ap = json_int(entry.at("ap"), "ap");
        if (!is_prime(p)) throw FormatViolation("keyed value " + p.get_str() + " is not prime");
        if (mpz_divisible_p(Int(static_cast<unsigned long>(data.level)).get_mpz_t(),
                            p.get_mpz_t())) {
            throw FormatViolation("prime " + p.get_str() + " divides the level");
        }
        std::uint64_t pu = p.get_ui();
        mpz_pow_ui(rp_norm.get_mpz_t(), p.get_mpz_t(), data.weight - 1);
        if (ap * ap > 4 * rp_norm) data.petersson_violations.insert(pu);
        data.prime_values[pu] = ap;
    }
    return data;
}

Int hecke_prime_power(const HeckeEigenData& data, std::uint64_t p, unsigned e) {
    auto it = data.prime_values.find(p);
    if (it == data.prime_values.end()) throw UnknownPrime(std::to_string(p));
    if (e == 0) return 1;
    Int norm;  // p^(k-1)
    mpz_ui_pow_ui(norm.get_mpz_t(), p, data.weight - 1);
    const Int& a_p = it->second;
    Int prev = 1, cur = a_p;
    for (unsigned i = 1; i < e; ++i) {
        Int next = a_p * cur - norm * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace taulab
