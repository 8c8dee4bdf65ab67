#include "kfan/kring.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kfan;

namespace {

FanPtr fixture(int index)
{
    switch (index) {
    case 0: return share(projective_space(2));
    case 1: return share(projective_space(3));
    case 2: return share(hirzebruch(2));
    default: return share(star_subdivision(projective_space(2), Cone{0, 1}));
    }
}

const char* fixture_name(int index)
{
    static const char* names[] = {"p2", "p3", "hirzebruch:2", "blowup-p2"};
    return names[index];
}

IntMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = entry(rng);
    return m;
}

} // namespace

static void BM_Presentation(benchmark::State& state)
{
    const FanPtr fan = fixture(static_cast<int>(state.range(0)));
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_presentation(fan));
}
BENCHMARK(BM_Presentation)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_KGroup(benchmark::State& state)
{
    const KPresentation p = build_presentation(fixture(static_cast<int>(state.range(0))));
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(k_group(p));
}
BENCHMARK(BM_KGroup)->DenseRange(0, 3);

static void BM_SmithNormalForm(benchmark::State& state)
{
    const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 0x6b66616e);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

static void BM_Canonicalize(benchmark::State& state)
{
    const FanPtr fan = fixture(static_cast<int>(state.range(0)));
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
    Rng rng(default_seed);
    PEExpression e = PEExpression::constant(fan, 0);
    for (int i = 0; i < 16; ++i)
        e = e + PEExpression::exponential(random_pl_function(fan, rng), i + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize(e));
}
BENCHMARK(BM_Canonicalize)->DenseRange(0, 3);

int main(int argc, char** argv)
{
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
