#include <benchmark/benchmark.h>

#include <ordercalc/cohomology.hpp>
#include <ordercalc/conics.hpp>
#include <ordercalc/fibers.hpp>
#include <ordercalc/intersect.hpp>

using namespace ordercalc;

namespace {

const ConicPair& pair()
{
    static const ConicPair p =
        build_pair(Conic::diagonal(1, 4, -5), Conic::diagonal(4, 1, -5),
                   {ProjPoint(1, 1, 1), ProjPoint(1, -1, 1), ProjPoint(-1, 1, 1), ProjPoint(-1, -1, 1)});
    return p;
}

}  // namespace

static void BM_ClassifyAndFiber(benchmark::State& state)
{
    const auto pts = sample_points(256, 20240611);
    std::size_t i = 0;
    for (auto _ : state) {
        const ProjPoint& p = pts[i++ % pts.size()];
        const Stratum s = classify_point(p, pair());
        benchmark::DoNotOptimize(fiber(marked_fiber_of_stratum(s)));
    }
}
BENCHMARK(BM_ClassifyAndFiber);

static void BM_MarkedFiberGeometric(benchmark::State& state)
{
    const auto reps = stratum_representatives(pair());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(marked_fiber_geometric(reps[i++ % reps.size()], pair()));
}
BENCHMARK(BM_MarkedFiberGeometric);

static void BM_Survey(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(survey(pair(), static_cast<std::uint64_t>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Survey)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CanonicalSquare(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(canonical_audit());
}
BENCHMARK(BM_CanonicalSquare);

static void BM_RuleTableBuild(benchmark::State& state)
{
    for (auto _ : state) {
        RuleTable t;
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_RuleTableBuild);

static void BM_ExtSums(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<DivisorClassY> src, dst;
    for (int k = 0; k < n; ++k) {
        src.push_back({k % 5 - 2, 1 - k % 3});
        dst.push_back({2 - k % 4, k % 7 - 3});
    }
    const LineBundleSum a(src), b(dst);
    for (auto _ : state) benchmark::DoNotOptimize(ext_sums(a, b));
}
BENCHMARK(BM_ExtSums)->Arg(2)->Arg(16)->Arg(128);

static void BM_EnumerateChoices(benchmark::State& state)
{
    for (auto _ : state)
        for (auto t : kAllStrata) benchmark::DoNotOptimize(enumerate_choices(marked_fiber_of_stratum(t)));
}
BENCHMARK(BM_EnumerateChoices);
BENCHMARK_MAIN();
