#include <cohsys/critical.hpp>
#include <cohsys/numerics.hpp>
#include <cohsys/parallel.hpp>
#include <cohsys/rational.hpp>
#include <cohsys/segre.hpp>
#include <cohsys/split_model.hpp>

#include <benchmark/benchmark.h>

using namespace cohsys;

namespace {

const CurveContext kG6{6, true};
const CSType kCase{2, 13, 4};

void BM_rational_harmonic(benchmark::State& state) {
    // partial harmonic sums grow the denominator fast, exercising gcd
    // normalization on genuinely large integers
    const long long terms = state.range(0);
    for (auto _ : state) {
        Rational sum(0);
        for (long long i = 1; i <= terms; ++i) sum = sum + Rational(1, i);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_rational_harmonic)->Arg(16)->Arg(64)->Arg(256);

void BM_rational_parse_roundtrip(benchmark::State& state) {
    Rational x(123456789, 987654321);
    for (auto _ : state) {
        Rational y = Rational::parse(x.str());
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_rational_parse_roundtrip);

void BM_brill_noether(benchmark::State& state) {
    for (auto _ : state) {
        Int b = brill_noether_number(kG6, kCase);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_brill_noether);

void BM_slope_margin(benchmark::State& state) {
    Rational alpha(1, 3);
    SubTriple sub{1, 6, 3};
    for (auto _ : state) {
        Rational m = slope_margin(kCase, sub, alpha);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_slope_margin);

void BM_walls_case_study(benchmark::State& state) {
    AlphaWindow w{Rational(0), Rational(1)};
    for (auto _ : state) {
        auto walls = enumerate_virtual_criticals(kCase, w);
        benchmark::DoNotOptimize(walls);
    }
}
BENCHMARK(BM_walls_case_study);

void BM_walls_wide(benchmark::State& state) {
    // a rank-4 type over a wide window has thousands of candidate subtriples
    set_thread_count(static_cast<unsigned>(state.range(0)));
    CSType T{4, 50, 6};
    AlphaWindow w{Rational(0), Rational(5)};
    for (auto _ : state) {
        auto walls = enumerate_virtual_criticals(T, w);
        benchmark::DoNotOptimize(walls);
    }
    set_thread_count(0);
}
BENCHMARK(BM_walls_wide)->Arg(1)->Arg(4)->UseRealTime();

void BM_prune_wide(benchmark::State& state) {
    CSType T{4, 50, 6};
    AlphaWindow w{Rational(0), Rational(5)};
    auto walls = enumerate_virtual_criticals(T, w);
    for (auto _ : state) {
        auto kept = prune_by_brill_noether(kG6, T, walls);
        benchmark::DoNotOptimize(kept);
    }
}
BENCHMARK(BM_prune_wide);

void BM_stratum_labels(benchmark::State& state) {
    Rational alpha(1, 3);
    for (auto _ : state) {
        auto labels = enumerate_stratum_labels(kG6, kCase, 1, 3, alpha, true);
        benchmark::DoNotOptimize(labels);
    }
}
BENCHMARK(BM_stratum_labels);

void BM_certificate_case_study(benchmark::State& state) {
    Rational alpha(1, 3);
    for (auto _ : state) {
        auto cert = nonemptiness_certificate(kG6, alpha, kCase);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_certificate_case_study);

void BM_certificate_recursive(benchmark::State& state) {
    // rank-3 target needing a rank-2 recursive piece
    Rational alpha(1, 2);
    CSType T{3, 3, 1};
    for (auto _ : state) {
        auto cert = nonemptiness_certificate(kG6, alpha, T, 1);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_certificate_recursive);

void BM_split_segre(benchmark::State& state) {
    SplitModel M{kG6, {{4, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}, {3, 1}, {8, 2}, {9, 1},
                       {5, 1}, {6, 3}, {7, 2}, {4, 2}, {10, 1}, {11, 2}, {12, 3}, {5, 2}}};
    Rational alpha(1, 2);
    for (auto _ : state) {
        auto s = split_segre(M, alpha, 8, 10);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_split_segre);

}  // namespace

BENCHMARK_MAIN();
