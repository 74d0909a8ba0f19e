#include <benchmark/benchmark.h>

#include <string>

#include "xilab/hadamard.hpp"
#include "xilab/specfun.hpp"
#include "xilab/spectral.hpp"
#include "xilab/xi.hpp"
#include "xilab/zeros.hpp"

using namespace xilab;

namespace {

const ZeroTable& table() {
    static const ZeroTable t =
        load_zeros(std::string(XILAB_DATA_DIR) + "/zeta_zeros_1e4.txt");
    return t;
}

}  // namespace

static void BM_LogGamma(benchmark::State& state) {
    const Complex s{0.25, 0.5 * static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(log_gamma(s));
}
BENCHMARK(BM_LogGamma)->Arg(5)->Arg(50)->Arg(200);

static void BM_Zeta(benchmark::State& state) {
    const Complex s{0.5, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(zeta(s).value);
}
BENCHMARK(BM_Zeta)->Arg(10)->Arg(50)->Arg(200);

static void BM_XiDirect(benchmark::State& state) {
    const StripPoint p{0.8, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(xi_direct(p));
}
BENCHMARK(BM_XiDirect)->Arg(10)->Arg(60);

static void BM_HardyZ(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hardy_Z(t));
}
BENCHMARK(BM_HardyZ)->Arg(20)->Arg(150);

static void BM_SKernel(benchmark::State& state) {
    const double w = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(S_kernel(w));
}
BENCHMARK(BM_SKernel)->Arg(-10)->Arg(0)->Arg(15);

static void BM_XiFromS(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Xi_from_S(t).value);
}
BENCHMARK(BM_XiFromS)->Arg(0)->Arg(30);

static void BM_SFromXi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(S_from_Xi(1.0).value);
}
BENCHMARK(BM_SFromXi);

static void BM_PartialProduct(benchmark::State& state) {
    const StripPoint half{0.5, 0.0};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(xi_partial_product(half, table(), n));
}
BENCHMARK(BM_PartialProduct)->Arg(100)->Arg(10000);

static void BM_LogDerivSum(benchmark::State& state) {
    const StripPoint p{2.0, 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(log_deriv_sum(p, table(), 1000));
}
BENCHMARK(BM_LogDerivSum);

static void BM_FindZeros(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(find_zeros(10.0, 30.0, 0.05));
}
BENCHMARK(BM_FindZeros);

static void BM_GramPoints(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gram_points(0, 30));
}
BENCHMARK(BM_GramPoints);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
