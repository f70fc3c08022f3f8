#pragma once

#include "isolp/graph.hpp"
#include "isolp/spectrum.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace isolp {

// Why an entry was forced to zero. First reason wins.
enum class MaskOrigin : std::uint8_t { Allowed = 0, Degree, Spectral, Pruning, Oracle };

// Entry (i, j) allowed means P(i, j) may be nonzero, i.e. vertex j of the
// first graph may map to vertex i of the second. The disallowed entries form
// the zero set K; the allowed ones are its complement S.
class SparsityMask {
 public:
  SparsityMask() = default;
  explicit SparsityMask(int n);  // everything allowed

  int size() const { return n_; }
  bool allowed(int i, int j) const { return origin(i, j) == MaskOrigin::Allowed; }
  MaskOrigin origin(int i, int j) const { return origin_[index(i, j)]; }
  // No-op if (i, j) is already disallowed.
  void disallow(int i, int j, MaskOrigin why);

  long long allowed_count() const;
  // allowed_count / n^2, the fraction of entries that may be nonzero.
  double sparsity_ratio() const;
  // Some row or column has no allowed entry.
  bool infeasible() const;

  // Set when a walk-count vector of one graph is not a rearrangement of the
  // other's. Independent of infeasible(); both certify non-isomorphism.
  bool walk_mismatch() const { return walk_mismatch_; }
  void set_walk_mismatch() { walk_mismatch_ = true; }

  // 0/1 indicator of allowed entries.
  Eigen::MatrixXd indicator() const;
  // Entrywise intersection of allowed sets; tags from *this take precedence.
  SparsityMask intersect(const SparsityMask& other) const;
  // True if every entry allowed here is allowed in `other`.
  bool subset_of(const SparsityMask& other) const;

  friend bool operator==(const SparsityMask& a, const SparsityMask& b);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }

  int n_ = 0;
  std::vector<MaskOrigin> origin_;
  bool walk_mismatch_ = false;
};

struct MaskOptions {
  bool degree = true;
  bool spectral = true;
  // Arc-consistency pass on top of the union; the solver turns it on.
  bool pruning = false;
  // Lemma comparison: |a - b| <= tol * (1 + max(|a|, |b|)).
  double tol = 1e-6;
  // Walk lengths 1..max_walk_length; 0 means n.
  int max_walk_length = 0;
};

bool invariant_close(double a, double b, double tol);

// Disallows (i, j) whenever a[j] != b[i] for each pair (a, b) with P a = b.
// Pairs used: (diag A, diag B) and (A^k 1, B^k 1) for k = 1..max_walk_length.
SparsityMask degree_mask(const WeightedGraph& a, const WeightedGraph& b, double tol = 1e-6,
                         int max_walk_length = 0);

// Same rule applied per eigenvalue group to the diagonal and the row sums of
// the eigenspace projector V V^T. Spectra must already compare equal.
SparsityMask spectral_mask(const Spectrum& sa, const Spectrum& sb, double tol = 1e-6);

// Arc-consistency fixpoint: (i, j) stays allowed only if every neighbour of j
// in `a` has an allowed partner among the equally weighted neighbours of i in
// `b`, and vice versa.
SparsityMask prune(SparsityMask mask, const WeightedGraph& a, const WeightedGraph& b,
                   double tol = 1e-6);

SparsityMask construct_mask(const WeightedGraph& a, const WeightedGraph& b, const Spectrum& sa,
                            const Spectrum& sb, const MaskOptions& options = {});

// n lines of space separated 0/1 followed by "allowed=<count> ratio=<ratio>".
void write_mask(std::ostream& out, const SparsityMask& mask);

}  // namespace isolp
