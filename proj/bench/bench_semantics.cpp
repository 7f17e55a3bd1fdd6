// Serial vs OpenMP extension search, against the brute-force oracle, and the
// pairwise detection matrix with and without the parallel loop.

#include <random>

#include <benchmark/benchmark.h>

#include "mma/dynamics.hpp"
#include "mma/oracle.hpp"

namespace {

std::vector<mma::Frame> corpus(std::size_t n, std::size_t count) {
    std::mt19937_64 rng(42 + n);
    std::vector<mma::Frame> frames;
    for (std::size_t i = 0; i < count; ++i) frames.push_back(mma::oracle::random_frame(n, 0.15, rng));
    return frames;
}

void BM_complete(benchmark::State& state, mma::Execution exec) {
    const auto frames = corpus(static_cast<std::size_t>(state.range(0)), 16);
    for (auto _ : state) {
        for (const auto& f : frames) benchmark::DoNotOptimize(mma::complete_sets(f, exec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(frames.size()));
}

void BM_oracle(benchmark::State& state) {
    const auto frames = corpus(static_cast<std::size_t>(state.range(0)), 16);
    for (auto _ : state) {
        for (const auto& f : frames) {
            benchmark::DoNotOptimize(mma::oracle::oracle_semantics(mma::SemanticsKind::complete, f));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(frames.size()));
}

BENCHMARK_CAPTURE(BM_complete, serial, mma::Execution::serial)->DenseRange(8, 20, 4)->Arg(28);
BENCHMARK_CAPTURE(BM_complete, parallel, mma::Execution::parallel)->DenseRange(8, 20, 4)->Arg(28);
BENCHMARK(BM_oracle)->DenseRange(8, 16, 4);

// Eight agents, each with a scope of three arguments and full awareness, so
// every pair runs two nontrivial extension searches.
mma::Transition crowded_transition() {
    std::mt19937_64 rng(7);
    const std::size_t agents = 8, per_agent = 3;
    mma::MmaState m;
    const mma::Frame global = mma::oracle::random_frame(agents * per_agent, 0.12, rng);
    m.global = global;
    std::size_t next = 0;
    std::vector<mma::ArgumentId> names(global.args().begin(), global.args().end());
    for (std::size_t i = 0; i < agents; ++i) {
        const mma::AgentId e("e" + std::to_string(i + 1));
        m.agents.insert(e);
        mma::ArgSet own(names.begin() + static_cast<long>(next), names.begin() + static_cast<long>(next + per_agent));
        next += per_agent;
        m.scope.emplace(e, mma::induced_scope(global, own));
        m.aware.emplace(e, global);
    }
    for (const auto& v : m.agents) {
        for (const auto& s : m.agents) {
            m.sem_model[{v, s}] = mma::SemanticsKind::preferred;
            m.trust[{v, s}] = 0;
        }
    }
    mma::AnnouncementEvent ev{mma::Frame(mma::ArgSet(names.begin(), names.begin() + 12), {}), {*m.agents.begin()}};
    return mma::announce(m, ev);
}

void BM_detection(benchmark::State& state, mma::Execution exec) {
    const mma::Transition t = crowded_transition();
    for (auto _ : state) benchmark::DoNotOptimize(mma::detection_matrix(t, exec));
}

BENCHMARK_CAPTURE(BM_detection, serial, mma::Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_detection, parallel, mma::Execution::parallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
