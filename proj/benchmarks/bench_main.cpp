#include <benchmark/benchmark.h>

#include "lindmap/gme.hpp"
#include "lindmap/sweep.hpp"

using namespace lindmap;

namespace {

ComplexMatrix random_hermitian(Rng& rng, int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = rng.normal();
        for (int j = i + 1; j < dim; ++j) {
            const Complex v = rng.cnormal();
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

void bm_eig_hermitian(benchmark::State& state) {
    Rng rng(kDefaultSeed);
    const ComplexMatrix m = random_hermitian(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Spectrum s = eig_hermitian(m, false);
        benchmark::DoNotOptimize(s.eigenvalues.data());
    }
}
BENCHMARK(bm_eig_hermitian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_lift_build(benchmark::State& state) {
    for (auto _ : state) {
        const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
        benchmark::DoNotOptimize(lm.total.transfer().dim());
    }
}
BENCHMARK(bm_lift_build);

void bm_lift_apply(benchmark::State& state) {
    const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
    const DensityMatrix w = w_state();
    for (auto _ : state) {
        const ComplexMatrix out = apply(lm, w.matrix);
        benchmark::DoNotOptimize(out.dim());
    }
}
BENCHMARK(bm_lift_apply);

void bm_detect_gme(benchmark::State& state) {
    const DensityMatrix w = w_state();
    for (auto _ : state) {
        const DetectionReport r = detect_gme(w, 0.5);
        benchmark::DoNotOptimize(r.min_eigenvalue);
    }
}
BENCHMARK(bm_detect_gme);

void bm_qutrit_choi(benchmark::State& state) {
    const SuperOp op = phi2_alpha(0.21);
    for (auto _ : state) {
        const ComplexMatrix c = choi(op);
        benchmark::DoNotOptimize(c.dim());
    }
}
BENCHMARK(bm_qutrit_choi);

void bm_n_gme(benchmark::State& state) {
    const DensityMatrix rho = noisy_w(0.95);
    for (auto _ : state) {
        benchmark::DoNotOptimize(n_gme(rho));
    }
}
BENCHMARK(bm_n_gme);

void bm_pure_scan(benchmark::State& state) {
    const SuperOp op = lambda_gamma(0.51);
    for (auto _ : state) {
        const PureScanResult r =
            min_output_eigenvalue_over_pure(op, static_cast<int>(state.range(0)),
                                            kDefaultSeed, false);
        benchmark::DoNotOptimize(r.min_eigenvalue);
    }
}
BENCHMARK(bm_pure_scan)->Arg(256)->Arg(1024);

void bm_gamma_boundary(benchmark::State& state) {
    const DensityMatrix w = w_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_detection_boundary(w));
    }
}
BENCHMARK(bm_gamma_boundary);

} // namespace

BENCHMARK_MAIN();
