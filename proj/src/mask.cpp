#include "isolp/mask.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

namespace isolp {

SparsityMask::SparsityMask(int n)
    : n_(n), origin_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), MaskOrigin::Allowed) {}

void SparsityMask::disallow(int i, int j, MaskOrigin why) {
  MaskOrigin& o = origin_[index(i, j)];
  if (o == MaskOrigin::Allowed) o = why;
}

long long SparsityMask::allowed_count() const {
  return std::count(origin_.begin(), origin_.end(), MaskOrigin::Allowed);
}

double SparsityMask::sparsity_ratio() const {
  if (n_ == 0) return 1.0;
  return static_cast<double>(allowed_count()) / (static_cast<double>(n_) * n_);
}

bool SparsityMask::infeasible() const {
  std::vector<char> row_ok(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    bool col_ok = false;
    for (int i = 0; i < n_; ++i) {
      if (allowed(i, j)) {
        col_ok = true;
        row_ok[static_cast<std::size_t>(i)] = 1;
      }
    }
    if (!col_ok) return true;
  }
  return std::find(row_ok.begin(), row_ok.end(), 0) != row_ok.end();
}

Eigen::MatrixXd SparsityMask::indicator() const {
  Eigen::MatrixXd s(n_, n_);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) s(i, j) = allowed(i, j) ? 1.0 : 0.0;
  }
  return s;
}

SparsityMask SparsityMask::intersect(const SparsityMask& other) const {
  if (other.n_ != n_) throw InvalidInput("mask size mismatch");
  SparsityMask out = *this;
  for (std::size_t k = 0; k < origin_.size(); ++k) {
    if (out.origin_[k] == MaskOrigin::Allowed) out.origin_[k] = other.origin_[k];
  }
  out.walk_mismatch_ = walk_mismatch_ || other.walk_mismatch_;
  return out;
}

bool SparsityMask::subset_of(const SparsityMask& other) const {
  if (other.n_ != n_) throw InvalidInput("mask size mismatch");
  for (std::size_t k = 0; k < origin_.size(); ++k) {
    if (origin_[k] == MaskOrigin::Allowed && other.origin_[k] != MaskOrigin::Allowed) return false;
  }
  return true;
}

bool operator==(const SparsityMask& a, const SparsityMask& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.origin_.size(); ++k) {
    if ((a.origin_[k] == MaskOrigin::Allowed) != (b.origin_[k] == MaskOrigin::Allowed)) return false;
  }
  return true;
}

bool invariant_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

PairList allowed_pairs(const SparsityMask& mask) {
  PairList out;
  for (int j = 0; j < mask.size(); ++j) {
    for (int i = 0; i < mask.size(); ++i) {
      if (mask.allowed(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

// One application of the lemma P a = b over the still-allowed pairs.
void apply_equality(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol,
                    MaskOrigin why, SparsityMask& mask, PairList& live) {
  std::erase_if(live, [&](const std::pair<int, int>& ij) {
    if (invariant_close(a(ij.second), b(ij.first), tol)) return false;
    mask.disallow(ij.first, ij.second, why);
    return true;
  });
}

bool same_multiset(Eigen::VectorXd a, Eigen::VectorXd b, double tol) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (!invariant_close(a(k), b(k), tol)) return false;
  }
  return true;
}

}  // namespace

SparsityMask degree_mask(const WeightedGraph& a, const WeightedGraph& b, double tol,
                         int max_walk_length) {
  const int n = a.size();
  if (b.size() != n) throw InvalidInput("degree_mask: graphs differ in size");
  SparsityMask mask(n);
  if (n == 0) return mask;
  PairList live = allowed_pairs(mask);

  const Eigen::VectorXd da = a.adjacency().diagonal();
  const Eigen::VectorXd db = b.adjacency().diagonal();
  apply_equality(da, db, tol, MaskOrigin::Degree, mask, live);
  if (!same_multiset(da, db, tol)) mask.set_walk_mismatch();

  const int kmax = max_walk_length > 0 ? max_walk_length : n;
  Eigen::VectorXd wa = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd wb = Eigen::VectorXd::Ones(n);
  for (int k = 1; k <= kmax; ++k) {
    wa = a.adjacency() * wa;
    wb = b.adjacency() * wb;
    // Joint rescaling keeps P wa = wb intact and prevents overflow.
    const double scale = std::max({wa.lpNorm<Eigen::Infinity>(), wb.lpNorm<Eigen::Infinity>(), 1.0});
    wa /= scale;
    wb /= scale;
    apply_equality(wa, wb, tol, MaskOrigin::Degree, mask, live);
    if (!same_multiset(wa, wb, tol)) mask.set_walk_mismatch();
    if (live.empty()) break;
  }
  return mask;
}

SparsityMask spectral_mask(const Spectrum& sa, const Spectrum& sb, double tol) {
  const int n = sa.size();
  if (sb.size() != n || sa.groups().size() != sb.groups().size()) {
    throw InvalidInput("spectral_mask: spectra have different group structure");
  }
  SparsityMask mask(n);
  if (n == 0) return mask;
  PairList live = allowed_pairs(mask);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  for (std::size_t g = 0; g < sa.groups().size(); ++g) {
    const Eigen::MatrixXd& va = sa.groups()[g].basis;
    const Eigen::MatrixXd& vb = sb.groups()[g].basis;
    if (va.cols() != vb.cols()) {
      throw InvalidInput("spectral_mask: multiplicity mismatch in group " + std::to_string(g));
    }
    const Eigen::VectorXd diag_a = va.rowwise().squaredNorm();
    const Eigen::VectorXd diag_b = vb.rowwise().squaredNorm();
    apply_equality(diag_a, diag_b, tol, MaskOrigin::Spectral, mask, live);
    const Eigen::VectorXd rows_a = va * (va.transpose() * ones);
    const Eigen::VectorXd rows_b = vb * (vb.transpose() * ones);
    apply_equality(rows_a, rows_b, tol, MaskOrigin::Spectral, mask, live);
    if (live.empty()) break;
  }
  return mask;
}

namespace {

struct Neighbor {
  int v;
  double w;
};

std::vector<std::vector<Neighbor>> neighbor_lists(const WeightedGraph& g) {
  std::vector<std::vector<Neighbor>> out(static_cast<std::size_t>(g.size()));
  for (int u = 0; u < g.size(); ++u) {
    for (int v = 0; v < g.size(); ++v) {
      if (g.weight(u, v) != 0.0) out[static_cast<std::size_t>(u)].push_back({v, g.weight(u, v)});
    }
  }
  return out;
}

}  // namespace

SparsityMask prune(SparsityMask mask, const WeightedGraph& a, const WeightedGraph& b, double tol) {
  const int n = mask.size();
  if (a.size() != n || b.size() != n) throw InvalidInput("prune: size mismatch");
  const auto na = neighbor_lists(a);
  const auto nb = neighbor_lists(b);
  PairList live = allowed_pairs(mask);

  // Every neighbour x of `from` must have some neighbour y of `to` with a
  // matching weight such that the pair (x, y) is still allowed.
  auto supported = [&](const std::vector<Neighbor>& from, const std::vector<Neighbor>& to,
                       auto&& pair_allowed) {
    for (const Neighbor& x : from) {
      bool found = false;
      for (const Neighbor& y : to) {
        if (invariant_close(x.w, y.w, tol) && pair_allowed(x.v, y.v)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(live, [&](const std::pair<int, int>& ij) {
      const auto [i, j] = ij;
      const auto& nj = na[static_cast<std::size_t>(j)];
      const auto& ni = nb[static_cast<std::size_t>(i)];
      const bool ok =
          supported(nj, ni, [&](int jj, int ii) { return mask.allowed(ii, jj); }) &&
          supported(ni, nj, [&](int ii, int jj) { return mask.allowed(ii, jj); });
      if (ok) return false;
      mask.disallow(i, j, MaskOrigin::Pruning);
      changed = true;
      return true;
    });
  }
  return mask;
}

SparsityMask construct_mask(const WeightedGraph& a, const WeightedGraph& b, const Spectrum& sa,
                            const Spectrum& sb, const MaskOptions& options) {
  if (a.size() != b.size()) throw InvalidInput("construct_mask: graphs differ in size");
  SparsityMask mask(a.size());
  if (options.degree) mask = mask.intersect(degree_mask(a, b, options.tol, options.max_walk_length));
  if (options.spectral) mask = mask.intersect(spectral_mask(sa, sb, options.tol));
  if (options.pruning) mask = prune(std::move(mask), a, b, options.tol);
  return mask;
}

void write_mask(std::ostream& out, const SparsityMask& mask) {
  for (int i = 0; i < mask.size(); ++i) {
    for (int j = 0; j < mask.size(); ++j) {
      if (j) out << ' ';
      out << (mask.allowed(i, j) ? 1 : 0);
    }
    out << '\n';
  }
  out << "allowed=" << mask.allowed_count() << " ratio=" << mask.sparsity_ratio() << '\n';
}

}  // namespace isolp
