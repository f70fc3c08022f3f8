#include "isolp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace isolp::kernels::serial {

using Eigen::Index;
using Eigen::MatrixXd;

void row_sum_step(const MatrixXd& z, const MatrixXd& w, const MatrixXd& y, MatrixXd& out) {
  const Index n = z.rows();
  out.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = z(i, j) - 0.5 * w(i, j) - y(i, j);
  }
  for (Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Index j = 0; j < n; ++j) sum += out(i, j);
    const double shift = (sum - 1.0) / static_cast<double>(n);
    for (Index j = 0; j < n; ++j) out(i, j) -= shift;
  }
}

void col_sum_step(const MatrixXd& z, const MatrixXd& w, const MatrixXd& y, MatrixXd& out) {
  const Index n = z.rows();
  out.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    double sum = 0.0;
    for (Index i = 0; i < n; ++i) {
      out(i, j) = z(i, j) - 0.5 * w(i, j) - y(i, j);
      sum += out(i, j);
    }
    const double shift = (sum - 1.0) / static_cast<double>(n);
    for (Index i = 0; i < n; ++i) out(i, j) -= shift;
  }
}

void nonneg_mask_step(const MatrixXd& z, const MatrixXd& y, const MatrixXd& s, MatrixXd& out) {
  const Index n = z.rows();
  out.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = std::max(z(i, j) - y(i, j), 0.0) * s(i, j);
  }
}

void average3(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c, MatrixXd& out) {
  const Index n = a.rows();
  out.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = (a(i, j) + b(i, j) + c(i, j)) / 3.0;
  }
}

double dual_step(MatrixXd& y, const MatrixXd& p, const MatrixXd& z) {
  double sq = 0.0;
  for (Index j = 0; j < y.cols(); ++j) {
    for (Index i = 0; i < y.rows(); ++i) {
      const double d = p(i, j) - z(i, j);
      y(i, j) += d;
      sq += d * d;
    }
  }
  return std::sqrt(sq);
}

double diff_norm(const MatrixXd& a, const MatrixXd& b) {
  double sq = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const double d = a(i, j) - b(i, j);
      sq += d * d;
    }
  }
  return std::sqrt(sq);
}

namespace {

// c = op(a) * op(b) with textbook loops.
void naive_product(const MatrixXd& a, bool ta, const MatrixXd& b, bool tb, MatrixXd& c) {
  const Index rows = ta ? a.cols() : a.rows();
  const Index inner = ta ? a.rows() : a.cols();
  const Index cols = tb ? b.rows() : b.cols();
  c.setZero(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index k = 0; k < inner; ++k) {
      const double bkj = tb ? b(j, k) : b(k, j);
      if (bkj == 0.0) continue;
      for (Index i = 0; i < rows; ++i) c(i, j) += (ta ? a(k, i) : a(i, k)) * bkj;
    }
  }
}

}  // namespace

void commutant_projection(const MatrixXd& m, const MatrixXd& vb, const MatrixXd& va,
                          const MatrixXd& r, MatrixXd& out, MatrixXd& work) {
  MatrixXd core;
  naive_product(vb, true, m, false, work);    // Vb^T M
  naive_product(work, false, va, false, core);  // (Vb^T M) Va
  for (Index j = 0; j < core.cols(); ++j) {
    for (Index i = 0; i < core.rows(); ++i) core(i, j) *= r(i, j);
  }
  naive_product(vb, false, core, false, work);  // Vb core
  naive_product(work, false, va, true, out);    // ... Va^T
}

void block_commutant_projection(const MatrixXd& m, const MatrixXd& vb, const MatrixXd& va,
                                const std::vector<int>& bounds, MatrixXd& out, MatrixXd& work) {
  const Index n = m.rows();
  MatrixXd r = MatrixXd::Zero(n, n);
  for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
    const Index size = bounds[g + 1] - bounds[g];
    r.block(bounds[g], bounds[g], size, size).setOnes();
  }
  commutant_projection(m, vb, va, r, out, work);
}

}  // namespace isolp::kernels::serial
