#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isolp {

// Raised for malformed inputs (asymmetric matrices, bad permutations, size
// mismatches). Solver-internal failures use std::runtime_error.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u;
  int v;
  double w = 1.0;
};

// Undirected weighted graph held as a dense symmetric adjacency matrix.
// Self-loops are nonzero diagonal entries. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws InvalidInput unless adj is square, finite and exactly symmetric.
  explicit WeightedGraph(Eigen::MatrixXd adj);

  // Symmetric closure of an edge list (0-based). Duplicate pairs throw.
  static WeightedGraph from_edges(int n, std::span<const Edge> edges);

  int size() const { return static_cast<int>(adj_.rows()); }
  const Eigen::MatrixXd& adjacency() const { return adj_; }
  double weight(int i, int j) const { return adj_(i, j); }

  // Number of nonzero entries on or above the diagonal.
  int edge_count() const;
  std::vector<Edge> edges() const;
  // Unweighted degree: number of nonzero entries in row v (loop counts once).
  int degree(int v) const;
  bool is_integral() const;
  double max_abs_weight() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.adj_.rows() == b.adj_.rows() && a.adj_ == b.adj_;
  }

 private:
  Eigen::MatrixXd adj_;
};

// Vertex bijection. map[j] = i means P(i, j) = 1: vertex j of the first graph
// is sent to vertex i of the second.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput if `map` is not a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator[](int j) const { return map_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  Eigen::MatrixXd matrix() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

// Returns Q A Q^T for the permutation matrix Q of p; entries are moved, not
// recomputed, so the result is exact.
WeightedGraph permute(const WeightedGraph& g, const Permutation& p);

}  // namespace isolp
