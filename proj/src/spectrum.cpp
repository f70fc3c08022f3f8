#include "isolp/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isolp {

Spectrum::Spectrum(int n, std::vector<EigenGroup> groups, double grouping_tol)
    : n_(n), groups_(std::move(groups)), grouping_tol_(grouping_tol) {}

Eigen::MatrixXd Spectrum::full_basis() const {
  Eigen::MatrixXd v(n_, n_);
  Eigen::Index col = 0;
  for (const EigenGroup& g : groups_) {
    v.middleCols(col, g.multiplicity()) = g.basis;
    col += g.multiplicity();
  }
  return v;
}

std::vector<int> Spectrum::column_groups() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < groups_.size(); ++k) {
    out.insert(out.end(), static_cast<std::size_t>(groups_[k].multiplicity()), static_cast<int>(k));
  }
  return out;
}

double default_grouping_tol(double spectral_radius) {
  return 1e-6 * std::max(1.0, spectral_radius);
}

Spectrum spectrum(const WeightedGraph& g, std::optional<double> grouping_tol) {
  const int n = g.size();
  if (n == 0) return Spectrum(0, {}, grouping_tol.value_or(default_grouping_tol(0.0)));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = es.eigenvalues();  // ascending
  const Eigen::MatrixXd& vecs = es.eigenvectors();
  const double radius = std::max(std::abs(lambda(0)), std::abs(lambda(n - 1)));
  const double tol = grouping_tol.value_or(default_grouping_tol(radius));

  std::vector<EigenGroup> groups;
  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k < n && lambda(k) - lambda(k - 1) <= tol) continue;
    EigenGroup grp;
    grp.value = lambda.segment(start, k - start).mean();
    grp.basis = vecs.middleCols(start, k - start);
    groups.push_back(std::move(grp));
    start = k;
  }
  return Spectrum(n, std::move(groups), tol);
}

double default_spectra_tol(const Spectrum& a, const Spectrum& b) {
  return std::max(a.grouping_tol(), b.grouping_tol());
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) throw InvalidInput("spectra of graphs with different vertex counts");
  if (a.groups().size() != b.groups().size()) return false;
  for (std::size_t k = 0; k < a.groups().size(); ++k) {
    const EigenGroup& ga = a.groups()[k];
    const EigenGroup& gb = b.groups()[k];
    if (ga.multiplicity() != gb.multiplicity()) return false;
    if (std::abs(ga.value - gb.value) > tol) return false;
  }
  return true;
}

}  // namespace isolp
