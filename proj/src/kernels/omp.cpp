#include "isolp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace isolp::kernels {

namespace omp {

using Eigen::Index;
using Eigen::MatrixXd;

namespace {
// Below this size a parallel region costs more than the pass itself.
constexpr Index kParallelMin = 96;
}

void row_sum_step(const MatrixXd& z, const MatrixXd& w, const MatrixXd& y, MatrixXd& out) {
  const Index n = z.rows();
  out.resize(n, n);
  std::vector<double> shift(static_cast<std::size_t>(n));
#pragma omp parallel if (n >= kParallelMin)
  {
#pragma omp for schedule(static)
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) out(i, j) = z(i, j) - 0.5 * w(i, j) - y(i, j);
    }
    // Row sums walk across columns; each thread owns a block of rows.
#pragma omp for schedule(static)
    for (Index i = 0; i < n; ++i) {
      double sum = 0.0;
      for (Index j = 0; j < n; ++j) sum += out(i, j);
      shift[static_cast<std::size_t>(i)] = (sum - 1.0) / static_cast<double>(n);
    }
#pragma omp for schedule(static)
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) out(i, j) -= shift[static_cast<std::size_t>(i)];
    }
  }
}

void col_sum_step(const MatrixXd& z, const MatrixXd& w, const MatrixXd& y, MatrixXd& out) {
  const Index n = z.rows();
  out.resize(n, n);
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
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
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = std::max(z(i, j) - y(i, j), 0.0) * s(i, j);
  }
}

void average3(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c, MatrixXd& out) {
  const Index n = a.rows();
  out.resize(n, n);
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = (a(i, j) + b(i, j) + c(i, j)) / 3.0;
  }
}

// Column partial sums are reduced in index order so the result does not
// depend on the thread count.
double dual_step(MatrixXd& y, const MatrixXd& p, const MatrixXd& z) {
  const Index n = y.cols();
  std::vector<double> partial(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
  for (Index j = 0; j < n; ++j) {
    double sq = 0.0;
    for (Index i = 0; i < y.rows(); ++i) {
      const double d = p(i, j) - z(i, j);
      y(i, j) += d;
      sq += d * d;
    }
    partial[static_cast<std::size_t>(j)] = sq;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return std::sqrt(total);
}

double diff_norm(const MatrixXd& a, const MatrixXd& b) {
  const Index n = a.cols();
  std::vector<double> partial(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
  for (Index j = 0; j < n; ++j) {
    double sq = 0.0;
    for (Index i = 0; i < a.rows(); ++i) {
      const double d = a(i, j) - b(i, j);
      sq += d * d;
    }
    partial[static_cast<std::size_t>(j)] = sq;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return std::sqrt(total);
}

void commutant_projection(const MatrixXd& m, const MatrixXd& vb, const MatrixXd& va,
                          const MatrixXd& r, MatrixXd& out, MatrixXd& work) {
  work.noalias() = vb.transpose() * m;
  out.noalias() = work * va;
  out.array() *= r.array();
  work.noalias() = vb * out;
  out.noalias() = work * va.transpose();
}

void block_commutant_projection(const MatrixXd& m, const MatrixXd& vb, const MatrixXd& va,
                                const std::vector<int>& bounds, MatrixXd& out, MatrixXd& work) {
  const Index n = m.rows();
  work.noalias() = m * va;
  out.resize(n, n);
  for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
    const Index start = bounds[g];
    const Index size = bounds[g + 1] - start;
    if (size == 1) {
      const double c = vb.col(start).dot(work.col(start));
      out.col(start) = c * vb.col(start);
    } else {
      const MatrixXd core = vb.middleCols(start, size).transpose() * work.middleCols(start, size);
      out.middleCols(start, size).noalias() = vb.middleCols(start, size) * core;
    }
  }
  work.noalias() = out * va.transpose();
  out.swap(work);
}

}  // namespace omp

std::string_view backend_name(Backend b) {
  return b == Backend::Serial ? "serial" : "openmp";
}

#define ISOLP_DISPATCH(fn, ...) \
  (backend == Backend::Serial ? serial::fn(__VA_ARGS__) : omp::fn(__VA_ARGS__))

void Ops::row_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w,
                       const Eigen::MatrixXd& y, Eigen::MatrixXd& out) const {
  ISOLP_DISPATCH(row_sum_step, z, w, y, out);
}
void Ops::col_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w,
                       const Eigen::MatrixXd& y, Eigen::MatrixXd& out) const {
  ISOLP_DISPATCH(col_sum_step, z, w, y, out);
}
void Ops::nonneg_mask_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& y,
                           const Eigen::MatrixXd& s, Eigen::MatrixXd& out) const {
  ISOLP_DISPATCH(nonneg_mask_step, z, y, s, out);
}
void Ops::average3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
                   Eigen::MatrixXd& out) const {
  ISOLP_DISPATCH(average3, a, b, c, out);
}
double Ops::dual_step(Eigen::MatrixXd& y, const Eigen::MatrixXd& p,
                      const Eigen::MatrixXd& z) const {
  return ISOLP_DISPATCH(dual_step, y, p, z);
}
double Ops::diff_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) const {
  return ISOLP_DISPATCH(diff_norm, a, b);
}
void Ops::commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                               const Eigen::MatrixXd& va, const Eigen::MatrixXd& r,
                               Eigen::MatrixXd& out, Eigen::MatrixXd& work) const {
  ISOLP_DISPATCH(commutant_projection, m, vb, va, r, out, work);
}

void Ops::block_commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                                     const Eigen::MatrixXd& va, const std::vector<int>& bounds,
                                     Eigen::MatrixXd& out, Eigen::MatrixXd& work) const {
  ISOLP_DISPATCH(block_commutant_projection, m, vb, va, bounds, out, work);
}

#undef ISOLP_DISPATCH

int configure_threads_from_env() {
  if (const char* env = std::getenv("ISO_LP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) omp_set_num_threads(static_cast<int>(v));
  }
  return omp_get_max_threads();
}

}  // namespace isolp::kernels
