#include "isolp/generators.hpp"

#include "isolp/rng.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace isolp {

namespace {

WeightedGraph from_pairs(int n, const std::set<std::pair<int, int>>& pairs) {
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : pairs) {
    adj(u, v) = 1.0;
    adj(v, u) = 1.0;
  }
  return WeightedGraph(std::move(adj));
}

void add_pair(std::set<std::pair<int, int>>& pairs, int u, int v) {
  pairs.insert(std::minmax(u, v));
}

}  // namespace

WeightedGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  CounterRng rng(seed);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) {
        adj(i, j) = 1.0;
        adj(j, i) = 1.0;
      }
    }
  }
  return WeightedGraph(std::move(adj));
}

WeightedGraph grid2d(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("grid dimensions must be positive");
  std::set<std::pair<int, int>> pairs;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) add_pair(pairs, v, v + 1);
      if (r + 1 < rows) add_pair(pairs, v, v + cols);
    }
  }
  return from_pairs(rows * cols, pairs);
}

WeightedGraph frucht() {
  constexpr std::array<int, 12> lcf = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < 12; ++i) {
    add_pair(pairs, i, (i + 1) % 12);
    add_pair(pairs, i, (i + lcf[static_cast<std::size_t>(i)] + 12) % 12);
  }
  return from_pairs(12, pairs);
}

WeightedGraph petersen() {
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    add_pair(pairs, i, (i + 1) % 5);
    add_pair(pairs, i, i + 5);
    add_pair(pairs, i + 5, (i + 2) % 5 + 5);
  }
  return from_pairs(10, pairs);
}

WeightedGraph empty_graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  return WeightedGraph(Eigen::MatrixXd::Zero(n, n));
}

WeightedGraph complete_graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Eigen::MatrixXd adj = Eigen::MatrixXd::Ones(n, n);
  adj.diagonal().setZero();
  return WeightedGraph(std::move(adj));
}

WeightedGraph path_graph(int n) {
  if (n < 1) throw InvalidInput("path needs at least one vertex");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) add_pair(pairs, i, i + 1);
  return from_pairs(n, pairs);
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least three vertices");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) add_pair(pairs, i, (i + 1) % n);
  return from_pairs(n, pairs);
}

WeightedGraph star_graph(int leaves) {
  if (leaves < 0) throw InvalidInput("negative leaf count");
  std::set<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) add_pair(pairs, 0, i);
  return from_pairs(leaves + 1, pairs);
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  const int na = a.size();
  const int nb = b.size();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(na + nb, na + nb);
  adj.topLeftCorner(na, na) = a.adjacency();
  adj.bottomRightCorner(nb, nb) = b.adjacency();
  return WeightedGraph(std::move(adj));
}

WeightedGraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("tree needs at least one vertex");
  if (n == 1) return empty_graph(1);
  if (n == 2) return path_graph(2);
  CounterRng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::set<std::pair<int, int>> pairs;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    add_pair(pairs, leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const int u = leaves.top();
  leaves.pop();
  add_pair(pairs, u, leaves.top());
  return from_pairs(n, pairs);
}

WeightedGraph friendly_weighted(int n, std::uint64_t seed, double margin) {
  if (n < 1) throw InvalidInput("graph needs at least one vertex");
  for (std::uint64_t attempt = 0;; ++attempt) {
    CounterRng rng(derive_seed(seed, 0xF41E, attempt));
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.bernoulli(0.6)) {
          const double w = 0.5 + 1.5 * rng.uniform01();
          adj(i, j) = w;
          adj(j, i) = w;
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj);
    const Eigen::VectorXd& lambda = es.eigenvalues();
    double min_gap = INFINITY;
    for (int k = 1; k < n; ++k) min_gap = std::min(min_gap, lambda(k) - lambda(k - 1));
    const double min_overlap =
        (es.eigenvectors().transpose() * Eigen::VectorXd::Ones(n)).cwiseAbs().minCoeff();
    if (min_gap > margin && min_overlap > margin) return WeightedGraph(std::move(adj));
    if (attempt > 10000) throw std::runtime_error("could not sample a friendly graph");
  }
}

Permutation random_permutation(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(map[static_cast<std::size_t>(i)], map[j]);
  }
  return Permutation(std::move(map));
}

std::pair<WeightedGraph, Permutation> random_permute(const WeightedGraph& g, std::uint64_t seed) {
  Permutation q = random_permutation(g.size(), seed);
  return {permute(g, q), std::move(q)};
}

}  // namespace isolp
