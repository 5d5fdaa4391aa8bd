#include "pbquad/flowmin.hpp"
#include "pbquad/methods.hpp"
#include "pbquad/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace pbquad;

PBF random_function(std::size_t n, std::size_t terms, std::size_t max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-10, 10);
    std::uniform_int_distribution<std::size_t> size(1, max_degree);
    PBF f(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<VarId> vars(n);
        for (std::size_t i = 0; i < n; ++i) {
            vars[i] = static_cast<VarId>(i + 1);
        }
        std::shuffle(vars.begin(), vars.end(), rng);
        vars.resize(size(rng));
        f.add_term(Monomial(vars), coef(rng));
    }
    return f;
}

PBF random_submodular(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> lin(-10, 10);
    std::uniform_int_distribution<int> pair(0, 10);
    PBF g(n);
    for (VarId i = 1; i <= n; ++i) {
        g.add_term({i}, lin(rng));
        for (VarId j = i + 1; j <= n; ++j) {
            g.add_term({i, j}, -pair(rng));
        }
    }
    return g;
}

void BM_Quadratize(benchmark::State& state) {
    const auto method = static_cast<Method>(state.range(0));
    PBF f = random_function(12, 40, 5, 7);
    if (method == Method::kzfd) {
        PBF negative(f.num_vars());
        for (const auto& [m, c] : f.terms()) {
            negative.add_term(m, m.size() >= 3 ? -abs(c) : c);
        }
        f = negative;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadratize(f, method));
    }
    state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Quadratize)->DenseRange(0, 7);

void BM_IsQuadratization(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PBF f = random_function(n, 3 * n, 4, 11);
    const PBF g = quadratize(f, Method::aggregate).g;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_quadratization(f, g, {.threads = 1}));
    }
    state.counters["universe"] = static_cast<double>(g.num_vars());
}
BENCHMARK(BM_IsQuadratization)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForceMin(benchmark::State& state) {
    const PBF g = random_submodular(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_min(g, {.threads = 1}));
    }
}
BENCHMARK(BM_BruteForceMin)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_MinCut(benchmark::State& state) {
    const PBF g = random_submodular(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_cut_minimize(g));
    }
}
BENCHMARK(BM_MinCut)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
