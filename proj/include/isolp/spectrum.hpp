#pragma once

#include "isolp/graph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace isolp {

// One eigenvalue together with an orthonormal basis of its eigenspace.
struct EigenGroup {
  double value = 0.0;
  Eigen::MatrixXd basis;  // n x multiplicity

  int multiplicity() const { return static_cast<int>(basis.cols()); }
};

// Eigenvalues sorted ascending, numerically equal ones merged into groups.
class Spectrum {
 public:
  Spectrum(int n, std::vector<EigenGroup> groups, double grouping_tol);

  int size() const { return n_; }
  const std::vector<EigenGroup>& groups() const { return groups_; }
  double grouping_tol() const { return grouping_tol_; }

  // Group bases concatenated in group order (n x n, orthogonal).
  Eigen::MatrixXd full_basis() const;
  // Group index of each column of full_basis().
  std::vector<int> column_groups() const;

 private:
  int n_;
  std::vector<EigenGroup> groups_;
  double grouping_tol_;
};

// 1e-6 * max(1, spectral_radius).
double default_grouping_tol(double spectral_radius);

// Dense symmetric eigendecomposition; consecutive eigenvalues closer than
// grouping_tol are chained into one group. Throws std::runtime_error if the
// eigensolver fails.
Spectrum spectrum(const WeightedGraph& g, std::optional<double> grouping_tol = std::nullopt);

// Group-by-group comparison: values within tol, multiplicities identical.
// Throws InvalidInput when the spectra come from graphs of different size.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

// Default tolerance for spectra_equal given both spectra.
double default_spectra_tol(const Spectrum& a, const Spectrum& b);

}  // namespace isolp
