#include <benchmark/benchmark.h>

#include "qutrit_geom/audit.hpp"
#include "qutrit_geom/erasure.hpp"
#include "qutrit_geom/invariants.hpp"
#include "qutrit_geom/states.hpp"

static void BM_EigHermitian(benchmark::State &state) {
    const qg::Matrix3 rho = qg::reduced_density(qg::sample_state(1, 0, qg::RankFilter::Any));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::eig_hermitian(rho));
    }
}
BENCHMARK(BM_EigHermitian);

static void BM_SampleState(benchmark::State &state) {
    uint64_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::sample_state(7, index++, qg::RankFilter::Any));
    }
}
BENCHMARK(BM_SampleState);

static void BM_InvariantsFromState(benchmark::State &state) {
    const auto s = qg::sample_state(3, 0, qg::RankFilter::Any);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::invariants_from_state(s));
    }
}
BENCHMARK(BM_InvariantsFromState);

static void BM_Erase(benchmark::State &state) {
    const double a = 1.0 / std::sqrt(3.0);
    const auto ms = qg::MarkedState::make({a, a, a}, {0.9, 0.8, 0.7});
    const auto setup = qg::family_setup(ms, qg::SweepFamily::Pivot, 0.6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::erase(ms, setup));
    }
}
BENCHMARK(BM_Erase);

static void BM_ScatterAndAudit(benchmark::State &state) {
    const qg::SampleSpec spec{static_cast<uint64_t>(state.range(0)), 1, qg::RankFilter::Any};
    for (auto _ : state) {
        const auto records = qg::run_scatter(spec);
        benchmark::DoNotOptimize(qg::run_audit(records, {}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScatterAndAudit)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
