#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <qcurve/qcurve.hpp>

using namespace qcurve;

static void BM_QuaternionProduct(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Quaternion> qs(1024);
    for (auto& q : qs) {
        q = {d(rng), d(rng), d(rng), d(rng)};
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const Quaternion p = qs[i & 1023] * qs[(i + 1) & 1023];
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_QuaternionProduct);

static void BM_SalkowskiFrameField(benchmark::State& state) {
    const Curve c = salkowski(1.0);
    const auto grid = uniform_grid(c.domain(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_field(c, grid));
    }
}
BENCHMARK(BM_SalkowskiFrameField)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

static void BM_SimilarCheck(benchmark::State& state) {
    const Curve a = salkowski(1.0);
    const Curve b = transformed(a, Matrix3::rotation({1, 2, 3}, 0.7), {1, -2, 0.5});
    const auto g = uniform_grid(a.domain(), 2001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(similar_check(a, g, b, g, Criterion::Tangent));
    }
}
BENCHMARK(BM_SimilarCheck)->Unit(benchmark::kMillisecond);

static void BM_ArcLength(benchmark::State& state) {
    const Curve c = salkowski(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(arc_length(c, c.domain().lo, c.domain().hi));
    }
}
BENCHMARK(BM_ArcLength);
BENCHMARK_MAIN();
