// Serial reference vs OpenMP kernels on dense statevectors, plus an
// end-to-end synthesis+simulation comparison.

#include <benchmark/benchmark.h>

#include <cmath>

#include "dickeforge/dicke_synth.hpp"
#include "dickeforge/kernels.hpp"
#include "dickeforge/statevector.hpp"
#include "dickeforge/transpile.hpp"

using namespace dickeforge;

namespace {

StateVector uniform_state(int n) {
    StateVector s(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    for (auto& a : s.amps) a = amp;
    return s;
}

void bm_rotate(benchmark::State& state, const kernels::Kernels& k) {
    const int n = static_cast<int>(state.range(0));
    StateVector s = uniform_state(n);
    const double c = std::cos(0.3), sn = std::sin(0.3);
    for (auto _ : state) {
        k.rotate(s.amps.data(), s.dim(), 1ull << (n - 1), 1ull, c, sn);
        benchmark::DoNotOptimize(s.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dim()));
}

void bm_flip(benchmark::State& state, const kernels::Kernels& k) {
    const int n = static_cast<int>(state.range(0));
    StateVector s = uniform_state(n);
    for (auto _ : state) {
        k.flip(s.amps.data(), s.dim(), 1ull << (n - 2), 1ull);
        benchmark::DoNotOptimize(s.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dim()));
}

void bm_simulate_dicke(benchmark::State& state, SimBackend backend) {
    const int n = static_cast<int>(state.range(0));
    const Circuit circuit = transpile(prepare_dicke(n, n / 2), GateSet::CnotRy);
    for (auto _ : state) {
        StateVector out = simulate(circuit, basis_state(n, std::uint64_t{0}), backend);
        benchmark::DoNotOptimize(out.amps.data());
    }
}

void rotate_serial(benchmark::State& s) { bm_rotate(s, kernels::serial_kernels()); }
void rotate_parallel(benchmark::State& s) { bm_rotate(s, kernels::parallel_kernels()); }
void flip_serial(benchmark::State& s) { bm_flip(s, kernels::serial_kernels()); }
void flip_parallel(benchmark::State& s) { bm_flip(s, kernels::parallel_kernels()); }
void simulate_serial(benchmark::State& s) { bm_simulate_dicke(s, SimBackend::Serial); }
void simulate_parallel(benchmark::State& s) { bm_simulate_dicke(s, SimBackend::Parallel); }

}  // namespace

BENCHMARK(rotate_serial)->Arg(18)->Arg(20)->Arg(22);
BENCHMARK(rotate_parallel)->Arg(18)->Arg(20)->Arg(22);
BENCHMARK(flip_serial)->Arg(18)->Arg(20)->Arg(22);
BENCHMARK(flip_parallel)->Arg(18)->Arg(20)->Arg(22);
BENCHMARK(simulate_serial)->Arg(16)->Arg(18);
BENCHMARK(simulate_parallel)->Arg(16)->Arg(18);

BENCHMARK_MAIN();
