#include "format.hpp"
#include "report.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_build_report(benchmark::State& state) {
    for (auto _ : state) {
        cli::ReportG6 R = cli::build_report_g6();
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_build_report);

void BM_render_report_json(benchmark::State& state) {
    cli::Doc d = cli::report_doc(cli::build_report_g6());
    for (auto _ : state) {
        std::string out = cli::render(d, cli::OutputFormat::Json);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_render_report_json);

void BM_report_roundtrip(benchmark::State& state) {
    cli::Doc d = cli::report_doc(cli::build_report_g6());
    for (auto _ : state) {
        cli::ReportG6 R = cli::report_from_doc(d);
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_report_roundtrip);

}  // namespace

BENCHMARK_MAIN();
