// Serial reference vs OpenMP kernels for one ADMM iteration.
#include "isolp/admm.hpp"
#include "isolp/commutant.hpp"
#include "isolp/generators.hpp"
#include "isolp/kernels.hpp"
#include "isolp/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace {

using isolp::kernels::Backend;
using isolp::kernels::Ops;

Eigen::MatrixXd random_matrix(int n, std::uint64_t seed) {
  return isolp::sample_direction(n, seed).w;
}

Backend backend_arg(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::Serial : Backend::OpenMP;
}

void BM_RowSumStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ops ops{backend_arg(state)};
  const Eigen::MatrixXd z = random_matrix(n, 1), w = random_matrix(n, 2), y = random_matrix(n, 3);
  Eigen::MatrixXd out;
  for (auto _ : state) {
    ops.row_sum_step(z, w, y, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_NonnegMaskStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ops ops{backend_arg(state)};
  const Eigen::MatrixXd z = random_matrix(n, 1), y = random_matrix(n, 3);
  const Eigen::MatrixXd s = Eigen::MatrixXd::Ones(n, n);
  Eigen::MatrixXd out;
  for (auto _ : state) {
    ops.nonneg_mask_step(z, y, s, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_CommutantProjection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ops ops{backend_arg(state)};
  const isolp::WeightedGraph g = isolp::erdos_renyi(n, 0.1, 7);
  const isolp::Spectrum s = isolp::spectrum(g);
  const isolp::CommutantProjector proj(s, s);
  const Eigen::MatrixXd m = random_matrix(n, 4);
  Eigen::MatrixXd out, work;
  for (auto _ : state) {
    proj.project(m, out, work, ops);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_AdmmIterations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const isolp::WeightedGraph g = isolp::erdos_renyi(n, 0.1, 7);
  const isolp::Spectrum s = isolp::spectrum(g);
  const isolp::CommutantProjector proj(s, s);
  const isolp::SparsityMask mask(n);
  const isolp::Direction dir = isolp::sample_direction(n, 5);
  isolp::AdmmParams params;
  params.max_iter = 10;
  params.backend = backend_arg(state);
  for (auto _ : state) {
    auto sol = isolp::admm_solve(proj, mask, dir, params);
    benchmark::DoNotOptimize(sol.p.data());
  }
}

void Sizes(benchmark::internal::Benchmark* b) {
  for (int n : {64, 128, 256}) {
    for (int backend : {0, 1}) b->Args({n, backend});
  }
  b->ArgNames({"n", "omp"})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_RowSumStep)->Apply(Sizes);
BENCHMARK(BM_NonnegMaskStep)->Apply(Sizes);
BENCHMARK(BM_CommutantProjection)->Apply(Sizes);
BENCHMARK(BM_AdmmIterations)->Apply(Sizes);

BENCHMARK_MAIN();
