#include <benchmark/benchmark.h>

#include "gprisp/forward.hpp"
#include "gprisp/inverse.hpp"
#include "gprisp/noise.hpp"
#include "gprisp/volterra.hpp"

using namespace gprisp;

namespace {

PhysicalConfig default_physics() { return PhysicalConfig{}; }

void BM_BoundaryTrace(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const SourceSpec f1 = SourceSpec::two_gaussian();
    const int oversample = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary_trace(cfg, p, f1, oversample));
}
BENCHMARK(BM_BoundaryTrace)->Arg(1)->Arg(2);

void BM_KernelFunctions(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const Basis b = make_basis(cfg.depth(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_functions(cfg, p, b));
}
BENCHMARK(BM_KernelFunctions)->Arg(5)->Arg(20);

void BM_AssembleGram(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 20));
    const Signal g = boundary_trace(cfg, p, SourceSpec::two_gaussian(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(assemble(kernels, g, 0.0));
}
BENCHMARK(BM_AssembleGram);

void BM_Solve(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 20));
    const Signal g = boundary_trace(cfg, p, SourceSpec::two_gaussian(), 2);
    const GramSystem sys = assemble(kernels, g, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_Solve);

void BM_Eigenvalues20(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(1.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 20));
    const Signal zero{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
    const GramSystem sys = assemble(kernels, zero, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(sym_eigvals(sys.matrix));
}
BENCHMARK(BM_Eigenvalues20);

void BM_VolterraMarch(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const Signal g2 = second_derivative_trace(cfg, p, SourceSpec::two_gaussian());
    for (auto _ : state) benchmark::DoNotOptimize(volterra_solve(cfg, p, g2));
}
BENCHMARK(BM_VolterraMarch);

void BM_Perturb(benchmark::State& state) {
    const PhysicalConfig cfg = default_physics();
    const Pulse p = make_pulse(8.0, 0.2);
    const Signal g = boundary_trace(cfg, p, SourceSpec::two_gaussian(), 2);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(perturb(g, {0.05, ++seed, 175}));
}
BENCHMARK(BM_Perturb);

}  // namespace

BENCHMARK_MAIN();
