#include <benchmark/benchmark.h>

#include "arclab/census.hpp"
#include "arclab/maxarc.hpp"
#include "arclab/randlab.hpp"
#include "arclab/sets.hpp"

using namespace arclab;

namespace {

PlaneModel affine(std::uint32_t q) { return PlaneModel(field_of_order(q), PlaneKind::affine); }

void BM_FieldMul(benchmark::State& state)
{
    const FieldSpec f = field_of_order(static_cast<std::uint32_t>(state.range(0)));
    const FieldElement g = f.element(f.q() - 1);
    FieldElement x = f.one();
    for (auto _ : state) {
        x = f.mul(x, g);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul)->Arg(49)->Arg(1024)->Arg(1 << 12);

void BM_Census(benchmark::State& state)
{
    const PlaneModel m = affine(static_cast<std::uint32_t>(state.range(0)));
    CensusQuery query;
    query.k = static_cast<std::uint32_t>(state.range(1));
    query.orbit_reduction = state.range(2) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_arcs_exact(m, query).count);
    }
}
BENCHMARK(BM_Census)->Args({5, 5, 0})->Args({9, 4, 0})->Args({9, 5, 1})->Args({16, 4, 1})->Unit(benchmark::kMillisecond);

void BM_MaxArc(benchmark::State& state)
{
    const PlaneModel m = affine(static_cast<std::uint32_t>(state.range(0)));
    const PointSet p = sample_random(m, DyadicProbability::parse("0.25"), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_arc_exact(m, p).size);
    }
}
BENCHMARK(BM_MaxArc)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state)
{
    const PlaneModel m = affine(static_cast<std::uint32_t>(state.range(0)));
    const DyadicProbability p = DyadicProbability::parse("0.1");
    std::uint64_t t = 0;
    for (auto _ : state) {
        const PointSet s = sample_random(m, p, 1, t++);
        benchmark::DoNotOptimize(collinear_triples(m, s));
    }
}
BENCHMARK(BM_Sample)->Arg(13)->Arg(49)->Arg(127);

}  // namespace

BENCHMARK_MAIN();
