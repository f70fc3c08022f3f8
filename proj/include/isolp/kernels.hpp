#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

// Dense kernels behind one ADMM iteration. Two implementations share the
// signatures: `serial` is a plain-loop reference used by the tests, `omp`
// parallelises the elementwise passes with OpenMP and hands products to
// Eigen's blocked GEMM. Both produce results independent of thread count.
namespace isolp::kernels {

enum class Backend { Serial, OpenMP };

std::string_view backend_name(Backend b);

namespace serial {

// out = X - (1/n) (X 1 - 1) 1^T  with X = Z - W/2 - Y  (rows sum to one)
void row_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                  Eigen::MatrixXd& out);
// out = X - (1/n) 1 (1^T X - 1^T)  with X = Z - W/2 - Y  (columns sum to one)
void col_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                  Eigen::MatrixXd& out);
// out = max(Z - Y, 0) o S
void nonneg_mask_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& y,
                      const Eigen::MatrixXd& s, Eigen::MatrixXd& out);
// out = (a + b + c) / 3
void average3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
              Eigen::MatrixXd& out);
// y += p - z; returns ||p - z||_F.
double dual_step(Eigen::MatrixXd& y, const Eigen::MatrixXd& p, const Eigen::MatrixXd& z);
// ||a - b||_F
double diff_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
// out = Vb ((Vb^T M Va) o R) Va^T
void commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                          const Eigen::MatrixXd& va, const Eigen::MatrixXd& r,
                          Eigen::MatrixXd& out, Eigen::MatrixXd& work);
// Same projection when R is block diagonal with diagonal blocks
// [bounds[g], bounds[g + 1]); only those blocks of Vb^T M Va are formed.
void block_commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                                const Eigen::MatrixXd& va, const std::vector<int>& bounds,
                                Eigen::MatrixXd& out, Eigen::MatrixXd& work);

}  // namespace serial

namespace omp {

void row_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                  Eigen::MatrixXd& out);
void col_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                  Eigen::MatrixXd& out);
void nonneg_mask_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& y,
                      const Eigen::MatrixXd& s, Eigen::MatrixXd& out);
void average3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
              Eigen::MatrixXd& out);
double dual_step(Eigen::MatrixXd& y, const Eigen::MatrixXd& p, const Eigen::MatrixXd& z);
double diff_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
void commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                          const Eigen::MatrixXd& va, const Eigen::MatrixXd& r,
                          Eigen::MatrixXd& out, Eigen::MatrixXd& work);
void block_commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                                const Eigen::MatrixXd& va, const std::vector<int>& bounds,
                                Eigen::MatrixXd& out, Eigen::MatrixXd& work);

}  // namespace omp

// Runtime dispatch used by the solver.
struct Ops {
  Backend backend = Backend::OpenMP;

  void row_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                    Eigen::MatrixXd& out) const;
  void col_sum_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& w, const Eigen::MatrixXd& y,
                    Eigen::MatrixXd& out) const;
  void nonneg_mask_step(const Eigen::MatrixXd& z, const Eigen::MatrixXd& y,
                        const Eigen::MatrixXd& s, Eigen::MatrixXd& out) const;
  void average3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
                Eigen::MatrixXd& out) const;
  double dual_step(Eigen::MatrixXd& y, const Eigen::MatrixXd& p, const Eigen::MatrixXd& z) const;
  double diff_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) const;
  void commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                            const Eigen::MatrixXd& va, const Eigen::MatrixXd& r,
                            Eigen::MatrixXd& out, Eigen::MatrixXd& work) const;
  void block_commutant_projection(const Eigen::MatrixXd& m, const Eigen::MatrixXd& vb,
                                  const Eigen::MatrixXd& va, const std::vector<int>& bounds,
                                  Eigen::MatrixXd& out, Eigen::MatrixXd& work) const;
};

// Caps OpenMP parallelism from ISO_LP_THREADS (0 or unset = runtime default).
// Returns the thread count in effect.
int configure_threads_from_env();

}  // namespace isolp::kernels
