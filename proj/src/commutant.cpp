#include "isolp/commutant.hpp"

namespace isolp {

Eigen::MatrixXd commutant_projector_mask(const Spectrum& sa, const Spectrum& sb) {
  if (sa.size() != sb.size() || sa.groups().size() != sb.groups().size()) {
    throw InvalidInput("spectra have different group structure");
  }
  const std::vector<int> ga = sa.column_groups();
  const std::vector<int> gb = sb.column_groups();
  if (ga != gb) throw InvalidInput("eigenvalue multiplicities differ");
  const int n = sa.size();
  Eigen::MatrixXd r(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      r(i, j) = gb[static_cast<std::size_t>(i)] == ga[static_cast<std::size_t>(j)] ? 1.0 : 0.0;
    }
  }
  return r;
}

CommutantProjector::CommutantProjector(const Spectrum& sa, const Spectrum& sb)
    : va_(sa.full_basis()), vb_(sb.full_basis()), r_(commutant_projector_mask(sa, sb)) {
  const std::vector<int> groups = sa.column_groups();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k == 0 || groups[k] != groups[k - 1]) bounds_.push_back(static_cast<int>(k));
  }
  bounds_.push_back(sa.size());
}

void CommutantProjector::project(const Eigen::MatrixXd& m, Eigen::MatrixXd& out,
                                 Eigen::MatrixXd& work, kernels::Ops ops) const {
  ops.block_commutant_projection(m, vb_, va_, bounds_, out, work);
}

Eigen::MatrixXd CommutantProjector::project(const Eigen::MatrixXd& m, kernels::Ops ops) const {
  Eigen::MatrixXd out;
  Eigen::MatrixXd work;
  project(m, out, work, ops);
  return out;
}

Eigen::MatrixXd project_commutant(const Eigen::MatrixXd& m, const Spectrum& sa,
                                  const Spectrum& sb) {
  return CommutantProjector(sa, sb).project(m);
}

}  // namespace isolp
