#include "taulab/tau.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace taulab {

namespace {

// Dense truncated squaring over int64 with __int128 accumulation.
// Throws Overflow if an accumulator would leave the safe range; the caller
// falls back to exact bignum squaring for that stage.
std::vector<std::int64_t> square_i64(const std::vector<std::int64_t>& a) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = i; j + i < n; ++j) {
            if (a[j] == 0) continue;
            __int128 term = static_cast<__int128>(ai) * a[j];
            if (j > i) term *= 2;
            __int128 acc = static_cast<__int128>(out[i + j]) + term;
            if (acc > INT64_MAX || acc < INT64_MIN) throw Overflow("series coefficient");
            out[i + j] = static_cast<std::int64_t>(acc);
        }
    }
    return out;
}

std::vector<Int> square_i64_to_mpz(const std::vector<std::int64_t>& a) {
    const std::size_t n = a.size();
    std::vector<Int> out(n, Int(0));
    // __int128 accumulators: |a_i| < 2^63, partial sums stay below
    // n * 2^126 only in pathological cases; guarded per addition.
    std::vector<__int128> acc(n, 0);
    const __int128 lim = static_cast<__int128>(1) << 126;
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) {
        std::int64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = i; j + i < n; ++j) {
            if (a[j] == 0) continue;
            __int128 term = static_cast<__int128>(ai) * a[j];
            if (j > i) term *= 2;
            acc[i + j] += term;
            if (acc[i + j] > lim || acc[i + j] < -lim) {
                fits = false;
                break;
            }
        }
    }
    if (fits) {
        for (std::size_t m = 0; m < n; ++m) {
            __int128 v = acc[m];
            bool neg = v < 0;
            unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
            Int hi = Int(static_cast<unsigned long>(u >> 64));
            out[m] = (hi << 64) + Int(static_cast<unsigned long>(u));
            if (neg) out[m] = -out[m];
        }
        return out;
    }
    // exact fallback
    std::vector<Int> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = a[i];
    for (std::size_t m = 0; m < n; ++m) out[m] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        for (std::size_t j = i; j + i < n; ++j) {
            if (b[j] == 0) continue;
            Int term = b[i] * b[j];
            if (j > i) term *= 2;
            out[i + j] += term;
        }
    }
    return out;
}

std::string sha256_hex(const std::string& body) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(body.data(), body.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string table_body(const TauTable& table) {
    std::string body;
    for (std::uint64_t n = 1; n <= table.bound; ++n) {
        body += std::to_string(n);
        body += '\t';
        body += table.values[n - 1].get_str();
        body += '\n';
    }
    return body;
}

}  // namespace

const Int& TauTable::at(std::uint64_t n) const {
    if (n < 1 || n > bound) throw InsufficientTable("n = " + std::to_string(n));
    return values[n - 1];
}

TauTable build_tau_table(std::uint64_t bound, std::uint64_t max_bound) {
    if (bound < 1) throw Error("table bound must be >= 1");
    if (bound > max_bound) throw BoundTooLarge("table bound " + std::to_string(bound));

    // eta^3 = sum_k (-1)^k (2k+1) q^(k(k+1)/2), truncated at q^(bound-1):
    // Delta = q * eta(q)^24, so tau(n) is the coefficient of q^(n-1) in eta^24.
    std::vector<std::int64_t> eta3(bound, 0);
    for (std::uint64_t k = 0;; ++k) {
        std::uint64_t idx = k * (k + 1) / 2;
        if (idx >= bound) break;
        std::int64_t c = static_cast<std::int64_t>(2 * k + 1);
        eta3[idx] = (k % 2 == 0) ? c : -c;
    }
    std::vector<std::int64_t> eta6 = square_i64(eta3);
    std::vector<std::int64_t> eta12 = square_i64(eta6);
    std::vector<Int> eta24 = square_i64_to_mpz(eta12);

    TauTable table;
    table.bound = bound;
    table.values = std::move(eta24);
    return table;
}

Int tau_prime_power(const Int& p, unsigned e, const Int& a_p) {
    if (e == 0) return 1;
    Int p11;
    mpz_pow_ui(p11.get_mpz_t(), p.get_mpz_t(), 11);
    Int prev = 1, cur = a_p;
    for (unsigned i = 1; i < e; ++i) {
        Int next = a_p * cur - p11 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int tau(std::uint64_t n, const TauTable& table) {
    if (n == 0) throw Error("tau(n) requires n >= 1");
    if (n <= table.bound) return table.at(n);
    Factorization f = factorize(Int(static_cast<unsigned long>(n)));
    if (!f.complete()) throw InsufficientTable("cannot factor " + std::to_string(n));
    Int out = 1;
    for (const auto& [p, e] : f.factors) {
        if (p > Int(static_cast<unsigned long>(table.bound))) {
            throw InsufficientTable("prime factor " + p.get_str() + " beyond table bound");
        }
        out *= tau_prime_power(p, e, table.at(mpz_get_ui(p.get_mpz_t())));
    }
    return out;
}

void store_table(const TauTable& table, const std::string& path) {
    std::string body = table_body(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    out << "TAUTABLE v1 bound=" << table.bound << " sha256=" << sha256_hex(body) << "\n";
    out << body;
    if (!out) throw IoFailure("short write to " + path);
}

TauTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw FormatViolation("missing header");

    std::uint64_t bound = 0;
    char sha[65] = {0};
    if (std::sscanf(header.c_str(), "TAUTABLE v1 bound=%lu sha256=%64s", &bound, sha) != 2 ||
        bound == 0) {
        throw FormatViolation("bad header: " + header);
    }
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (sha256_hex(body) != sha) throw FormatViolation("sha256 mismatch");

    TauTable table;
    table.bound = bound;
    table.values.reserve(bound);
    std::istringstream lines(body);
    std::string line;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (!std::getline(lines, line)) throw FormatViolation("truncated body");
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || std::stoull(line.substr(0, tab)) != n) {
            throw FormatViolation("bad line for n = " + std::to_string(n));
        }
        table.values.emplace_back(line.substr(tab + 1));
    }
    return table;
}

}  // namespace taulab
