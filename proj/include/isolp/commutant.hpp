#pragma once

#include "isolp/kernels.hpp"
#include "isolp/spectrum.hpp"

#include <Eigen/Dense>

namespace isolp {

// R(i, j) = 1 iff eigenvector i of the second spectrum and eigenvector j of
// the first belong to the same eigenvalue group. Columns are ordered as in
// Spectrum::full_basis(), so R is block diagonal.
Eigen::MatrixXd commutant_projector_mask(const Spectrum& sa, const Spectrum& sb);

// Orthogonal projection onto {Z : Z A = B Z}, where A and B have spectra sa
// and sb. Holds the full eigenbases so they are assembled once per pair.
class CommutantProjector {
 public:
  // Throws InvalidInput if the group structures differ.
  CommutantProjector(const Spectrum& sa, const Spectrum& sb);

  int size() const { return static_cast<int>(va_.rows()); }
  const Eigen::MatrixXd& basis_a() const { return va_; }
  const Eigen::MatrixXd& basis_b() const { return vb_; }
  const Eigen::MatrixXd& group_mask() const { return r_; }

  // out = Vb ((Vb^T M Va) o R) Va^T. `work` is scratch of any shape.
  void project(const Eigen::MatrixXd& m, Eigen::MatrixXd& out, Eigen::MatrixXd& work,
               kernels::Ops ops = {}) const;
  Eigen::MatrixXd project(const Eigen::MatrixXd& m, kernels::Ops ops = {}) const;

 private:
  Eigen::MatrixXd va_;
  Eigen::MatrixXd vb_;
  Eigen::MatrixXd r_;
  std::vector<int> bounds_;  // group column ranges, ends with n
};

Eigen::MatrixXd project_commutant(const Eigen::MatrixXd& m, const Spectrum& sa,
                                  const Spectrum& sb);

}  // namespace isolp
