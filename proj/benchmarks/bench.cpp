#include <benchmark/benchmark.h>

#include "taulab/experiments.hpp"
#include "taulab/lucas.hpp"
#include "taulab/quadfield.hpp"
#include "taulab/tau.hpp"

using namespace taulab;

namespace {

void BM_BuildTauTable(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        TauTable t = build_tau_table(bound);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetComplexityN(static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_BuildTauTable)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_LucasSequence(benchmark::State& state) {
    LucasPair pair = normalize_pair(2, 12, Int(-24));
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::vector<Int> u = lucas_sequence(pair, n);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_LucasSequence)->Arg(100)->Arg(400)->Arg(1600)->Complexity()
    ->Unit(benchmark::kMicrosecond);

void BM_PrimitivePart(benchmark::State& state) {
    LucasPair pair = normalize_pair(2, 12, Int(-24));
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        PrimitiveDivisorRecord rec = primitive_part(pair, n);
        benchmark::DoNotOptimize(rec.primitive_part.get_mpz_t());
    }
}
BENCHMARK(BM_PrimitivePart)->Arg(60)->Arg(210)->Unit(benchmark::kMillisecond);

void BM_OmegaCertificate(benchmark::State& state) {
    LucasPair pair = normalize_pair(2, 12, Int(-24));
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        OmegaCertificate cert = certified_omega_lower_bound(pair, n);
        benchmark::DoNotOptimize(cert.certified);
    }
}
BENCHMARK(BM_OmegaCertificate)->Arg(60)->Arg(210)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
    // tau(2^n): size grows with n, mixing easy and hard factorizations
    LucasPair pair = normalize_pair(2, 12, Int(-24));
    Int value = eigenvalue_from_u(pair, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        Factorization f = factorize(value);
        benchmark::DoNotOptimize(f.factors.data());
    }
}
BENCHMARK(BM_Factorize)->Arg(20)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_IsPrimeMersenne(benchmark::State& state) {
    Int m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(state.range(0)));
    m -= 1;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(m));
}
BENCHMARK(BM_IsPrimeMersenne)->Arg(127)->Arg(521)->Arg(2203);

void BM_SatoTateReport(benchmark::State& state) {
    TauTable t = build_tau_table(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        Report rep = sato_tate_report(t, 20);
        benchmark::DoNotOptimize(rep.rows.data());
    }
}
BENCHMARK(BM_SatoTateReport)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_HeightQuadratic(benchmark::State& state) {
    QuadNumber gamma = gamma_value(make_quadratic_pair(2, 12, Int(-24)));
    for (auto _ : state) {
        HeightValue h = height_quadratic(gamma);
        benchmark::DoNotOptimize(h.value.backend().data());
    }
}
BENCHMARK(BM_HeightQuadratic);

}  // namespace

BENCHMARK_MAIN();
