#include "polycert/certificate.hpp"
#include "polycert/dualcolor.hpp"
#include "polycert/encodings.hpp"
#include "polycert/linear_system.hpp"
#include "polycert/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace polycert;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_OracleHamiltonian(benchmark::State& state) {
    const PolySystem s = encode_hamiltonian(graphs::complete(7));
    OracleOptions o;
    o.count_all = true;
    o.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(decide(s, o));
    label(state);
}
BENCHMARK(BM_OracleHamiltonian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleColoring(benchmark::State& state) {
    const PolySystem s = encode_k_coloring(graphs::petersen(), 3);
    OracleOptions o;
    o.count_all = true;
    o.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(decide(s, o));
    label(state);
}
BENCHMARK(BM_OracleColoring)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildSystem(benchmark::State& state) {
    const PolySystem s = encode_k_coloring(graphs::complete(4), 3);
    BuildOptions b;
    b.degree = 4;
    b.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(build_system(s, b));
    label(state);
}
BENCHMARK(BM_BuildSystem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SparsificationTrials(benchmark::State& state) {
    const PolySystem s = encode_k_coloring(graphs::complete(4), 3);
    for (auto _ : state) benchmark::DoNotOptimize(sparsification_trial(s, 4, 0.4, 8, 1, mode(state)));
    label(state);
}
BENCHMARK(BM_SparsificationTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sigma(benchmark::State& state) {
    const Graph g = graphs::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(simultaneous_chromatic_number(g, mode(state)));
    label(state);
}
BENCHMARK(BM_Sigma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Combination(benchmark::State& state) {
    const Certificate c = extend_odd_wheel_certificate(extend_odd_wheel_certificate(odd_wheel_seed_certificate(), 3), 5);
    for (auto _ : state) benchmark::DoNotOptimize(combination(c, mode(state)));
    label(state);
}
BENCHMARK(BM_Combination)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
