#pragma once

#include "isolp/commutant.hpp"
#include "isolp/graph.hpp"
#include "isolp/kernels.hpp"
#include "isolp/mask.hpp"
#include "isolp/spectrum.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace isolp {

// Random linear objective Tr(W^T P), scaled so that mean |W_ij| = 1.
struct Direction {
  Eigen::MatrixXd w;
  std::uint64_t seed = 0;
};

// i.i.d. standard normal entries from the counter-based generator, then
// W /= mean(|W|).
Direction sample_direction(int n, std::uint64_t seed);

struct AdmmParams {
  static constexpr double kRho = 1.0;

  int max_iter = 5000;
  // Thresholds are multiplied by n: stop when max_i ||P_i - Z||_F <= eps_primal * n
  // and ||Z - Z_prev||_F <= eps_dual * n hold for `stable_iters` iterations in a row.
  double eps_primal = 1e-7;
  double eps_dual = 1e-7;
  int stable_iters = 5;
  kernels::Backend backend = kernels::Backend::OpenMP;
  bool record_trace = false;
};

struct ResidualSample {
  int iter;
  double primal;
  double dual;
};

// The seven consensus iterates.
struct AdmmState {
  Eigen::MatrixXd p1, p2, p3, z, y1, y2, y3;
  int iter = 0;
};

struct RelaxedSolution {
  Eigen::MatrixXd p;  // final Z
  bool converged = false;
  int iters = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  std::vector<ResidualSample> trace;  // filled when AdmmParams::record_trace
};

// Sinkhorn balancing of the mask indicator S (50 sweeps); falls back to S / n
// when the result is not within 1e-3 of doubly stochastic.
Eigen::MatrixXd initial_iterate(const SparsityMask& mask);

// Consensus ADMM for
//   minimize Tr(W^T P)  s.t.  P A = B P, P 1 = 1, P^T 1 = 1, P >= 0, P = 0 off the mask.
// Throws InvalidInput if the mask is infeasible or sizes disagree. Running out
// of iterations is reported through `converged`, not an exception.
RelaxedSolution admm_solve(const CommutantProjector& projector, const SparsityMask& mask,
                           const Direction& direction, const AdmmParams& params = {});

RelaxedSolution admm_solve(const WeightedGraph& a, const WeightedGraph& b, const Spectrum& sa,
                           const Spectrum& sb, const SparsityMask& mask,
                           const Direction& direction, const AdmmParams& params = {});

// "iter,primal,dual" header plus one line per recorded iteration.
void write_trace_csv(std::ostream& out, const RelaxedSolution& solution);

}  // namespace isolp
