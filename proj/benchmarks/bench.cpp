#include <benchmark/benchmark.h>

#include "qchan/frames.hpp"
#include "qchan/nocloning.hpp"
#include "qchan/teleport.hpp"

using namespace qchan;

namespace {

ComplexMatrix random_square(int dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            double re, im;
            rng.gaussian_pair(re, im);
            m(r, c) = Complex{re, im};
        }
    }
    return m;
}

ComplexMatrix random_herm(int dim, std::uint64_t seed) {
    const ComplexMatrix a = random_square(dim, seed);
    return Complex{0.5, 0.0} * (a + a.adjoint());
}

void BM_matmul(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ComplexMatrix a = random_square(dim, 1);
    const ComplexMatrix b = random_square(dim, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(matmul(a, b));
    }
}
BENCHMARK(BM_matmul)->Arg(2)->Arg(8)->Arg(64);

void BM_kron(benchmark::State& state) {
    const ComplexMatrix a = random_square(2, 3);
    const ComplexMatrix b = random_square(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron(a, b));
    }
}
BENCHMARK(BM_kron)->Arg(2)->Arg(4);

void BM_hermitian_eigenvalues(benchmark::State& state) {
    const ComplexMatrix h = random_herm(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(h));
    }
}
BENCHMARK(BM_hermitian_eigenvalues)->Arg(2)->Arg(8)->Arg(64);

void BM_partial_trace(benchmark::State& state) {
    const SystemLayout layout = SystemLayout::qubit_cba();
    Rng rng(6);
    const ComplexMatrix rho = random_density(8, rng).mat();
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, {"B"}, layout));
    }
}
BENCHMARK(BM_partial_trace);

void BM_channel_apply(benchmark::State& state) {
    const KrausChannel& channel = teleport_channel();
    Rng rng(7);
    const ComplexMatrix rho = random_density(8, rng).mat();
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply(channel, rho));
    }
}
BENCHMARK(BM_channel_apply);

void BM_run_teleport(benchmark::State& state) {
    teleport_channel();  // exclude the one-time search from the loop
    const DensityOperator rho = pure(random_pure(2, 8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_teleport(rho));
    }
}
BENCHMARK(BM_run_teleport);

void BM_choi(benchmark::State& state) {
    const KrausChannel& channel = teleport_channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(choi(channel));
    }
}
BENCHMARK(BM_choi);

void BM_haar_unitary(benchmark::State& state) {
    Rng rng(9);
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(dim, rng));
    }
}
BENCHMARK(BM_haar_unitary)->Arg(2)->Arg(8);

void BM_clone_witness(benchmark::State& state) {
    const SystemLayout layout = SystemLayout::qubit_cba();
    const auto [channel, rho_ba] = random_instance(layout, 3, 10);
    const std::vector<DensityOperator> probes = default_probes(10, 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(clone_witness(channel, rho_ba, probes, layout));
    }
}
BENCHMARK(BM_clone_witness);

void BM_audit(benchmark::State& state) {
    teleport_channel();
    const auto [event_i, event_ii] = default_events();
    const DensityOperator rho = pure(random_pure(2, 11));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit(rho, event_i, event_ii));
    }
}
BENCHMARK(BM_audit);

}  // namespace

BENCHMARK_MAIN();
