#include <circforce/circulant.hpp>
#include <circforce/forcing.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace circforce;

void BM_CloseMaskTorus(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph g = build_circulant(CirculantSpec(n, {1, n / 4}));
    const VertexMask seed = bit(0) | bit(1) | bit(n / 4) | bit(n / 4 + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(close_mask(g, seed));
}
BENCHMARK(BM_CloseMaskTorus)->Arg(16)->Arg(32)->Arg(64);

void BM_CloseMaskRandomSeeds(benchmark::State& state)
{
    const Graph g = build_circulant(CirculantSpec(24, {1, 5, 7}));
    std::mt19937_64 rng(1);
    std::vector<VertexMask> seeds(256);
    for (auto& s : seeds)
        s = rng() & g.vertices();
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(close_mask(g, seeds[i++ % seeds.size()]));
}
BENCHMARK(BM_CloseMaskRandomSeeds);

void BM_ClosureWithChronology(benchmark::State& state)
{
    const Graph g = build_circulant(CirculantSpec(48, {1, 12}));
    const FillState f = FillState::from_vertices(g, {0, 12, 24, 36, 1, 13, 25, 37});
    for (auto _ : state) {
        std::vector<Force> forces;
        benchmark::DoNotOptimize(closure(g, f, forces));
    }
}
BENCHMARK(BM_ClosureWithChronology);

} // namespace
