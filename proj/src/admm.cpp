#include "isolp/admm.hpp"

#include "isolp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace isolp {

Direction sample_direction(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("direction needs n >= 1");
  CounterRng rng(seed);
  Direction d;
  d.seed = seed;
  d.w.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) d.w(i, j) = rng.normal();
  }
  d.w /= d.w.cwiseAbs().mean();
  return d;
}

Eigen::MatrixXd initial_iterate(const SparsityMask& mask) {
  const int n = mask.size();
  const Eigen::MatrixXd s = mask.indicator();
  Eigen::MatrixXd x = s;
  for (int sweep = 0; sweep < 50; ++sweep) {
    const Eigen::VectorXd rows = x.rowwise().sum();
    for (int i = 0; i < n; ++i) {
      if (rows(i) > 0.0) x.row(i) /= rows(i);
    }
    const Eigen::RowVectorXd cols = x.colwise().sum();
    for (int j = 0; j < n; ++j) {
      if (cols(j) > 0.0) x.col(j) /= cols(j);
    }
  }
  const double row_err = (x.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_err = (x.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_err > 1e-3 || col_err > 1e-3) return s / static_cast<double>(n);
  return x;
}

RelaxedSolution admm_solve(const CommutantProjector& projector, const SparsityMask& mask,
                           const Direction& direction, const AdmmParams& params) {
  const int n = projector.size();
  if (mask.size() != n || direction.w.rows() != n || direction.w.cols() != n) {
    throw InvalidInput("admm_solve: size mismatch");
  }
  if (mask.infeasible()) throw InvalidInput("admm_solve: mask leaves a row or column empty");

  const kernels::Ops ops{params.backend};
  const Eigen::MatrixXd s = mask.indicator();
  const Eigen::MatrixXd& w = direction.w;

  AdmmState st;
  st.z = initial_iterate(mask);
  st.p1 = st.z;
  st.p2 = st.z;
  st.p3 = st.z;
  // Duals start at zero: the Z update projects the plain average of the P_i,
  // which matches the consensus step only while the projected dual sum is zero.
  st.y1 = Eigen::MatrixXd::Zero(n, n);
  st.y2 = st.y1;
  st.y3 = st.y1;

  Eigen::MatrixXd z_prev;
  Eigen::MatrixXd avg;
  Eigen::MatrixXd work;

  RelaxedSolution out;
  const double primal_tol = params.eps_primal * n;
  const double dual_tol = params.eps_dual * n;
  int streak = 0;

  for (st.iter = 1; st.iter <= params.max_iter; ++st.iter) {
    ops.row_sum_step(st.z, w, st.y1, st.p1);
    ops.col_sum_step(st.z, w, st.y2, st.p2);
    ops.nonneg_mask_step(st.z, st.y3, s, st.p3);

    z_prev.swap(st.z);
    ops.average3(st.p1, st.p2, st.p3, avg);
    projector.project(avg, st.z, work, ops);

    const double r1 = ops.dual_step(st.y1, st.p1, st.z);
    const double r2 = ops.dual_step(st.y2, st.p2, st.z);
    const double r3 = ops.dual_step(st.y3, st.p3, st.z);
    const double primal = std::max({r1, r2, r3});
    const double dual = ops.diff_norm(st.z, z_prev);

    out.primal_residual = primal;
    out.dual_residual = dual;
    out.iters = st.iter;
    if (params.record_trace) out.trace.push_back({st.iter, primal, dual});

    // An exact fixed point repeats forever, so there is nothing to wait for.
    if (primal == 0.0 && dual == 0.0) {
      out.converged = true;
      break;
    }
    streak = (primal <= primal_tol && dual <= dual_tol) ? streak + 1 : 0;
    if (streak >= params.stable_iters) {
      out.converged = true;
      break;
    }
  }
  out.p = std::move(st.z);
  return out;
}

RelaxedSolution admm_solve(const WeightedGraph& a, const WeightedGraph& b, const Spectrum& sa,
                           const Spectrum& sb, const SparsityMask& mask,
                           const Direction& direction, const AdmmParams& params) {
  if (a.size() != b.size() || sa.size() != a.size() || sb.size() != b.size()) {
    throw InvalidInput("admm_solve: size mismatch");
  }
  return admm_solve(CommutantProjector(sa, sb), mask, direction, params);
}

void write_trace_csv(std::ostream& out, const RelaxedSolution& solution) {
  out << "iter,primal,dual\n";
  for (const ResidualSample& r : solution.trace) {
    out << r.iter << ',' << r.primal << ',' << r.dual << '\n';
  }
}

}  // namespace isolp
