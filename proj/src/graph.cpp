#include "isolp/graph.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace isolp {

WeightedGraph::WeightedGraph(Eigen::MatrixXd adj) : adj_(std::move(adj)) {
  if (adj_.rows() != adj_.cols()) {
    throw InvalidInput("adjacency matrix must be square");
  }
  const Eigen::Index n = adj_.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!std::isfinite(adj_(i, j))) {
        throw InvalidInput("adjacency matrix has a non-finite entry");
      }
      if (adj_(i, j) != adj_(j, i)) {
        throw InvalidInput("adjacency matrix is not symmetric at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
      }
    }
  }
}

WeightedGraph WeightedGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidInput("edge endpoint out of range");
    }
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      throw InvalidInput("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adj(e.u, e.v) = e.w;
    adj(e.v, e.u) = e.w;
  }
  return WeightedGraph(std::move(adj));
}

int WeightedGraph::edge_count() const {
  int m = 0;
  for (int j = 0; j < size(); ++j) {
    for (int i = 0; i <= j; ++i) {
      if (adj_(i, j) != 0.0) ++m;
    }
  }
  return m;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      if (adj_(i, j) != 0.0) out.push_back({i, j, adj_(i, j)});
    }
  }
  return out;
}

int WeightedGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < size(); ++u) {
    if (adj_(v, u) != 0.0) ++d;
  }
  return d;
}

bool WeightedGraph::is_integral() const {
  return (adj_.array() == adj_.array().round()).all();
}

double WeightedGraph::max_abs_weight() const {
  return adj_.size() == 0 ? 0.0 : adj_.cwiseAbs().maxCoeff();
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<char> hit(map_.size(), 0);
  for (int i : map_) {
    if (i < 0 || static_cast<std::size_t>(i) >= map_.size() || hit[static_cast<std::size_t>(i)]) {
      throw InvalidInput("permutation map is not a bijection");
    }
    hit[static_cast<std::size_t>(i)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) {
    inv[static_cast<std::size_t>(map_[j])] = static_cast<int>(j);
  }
  return Permutation(std::move(inv));
}

Eigen::MatrixXd Permutation::matrix() const {
  const int n = size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) p((*this)[j], j) = 1.0;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (map_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

WeightedGraph permute(const WeightedGraph& g, const Permutation& p) {
  const int n = g.size();
  if (p.size() != n) throw InvalidInput("permutation size does not match graph");
  Eigen::MatrixXd out(n, n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) out(p[u], p[v]) = g.weight(u, v);
  }
  return WeightedGraph(std::move(out));
}

}  // namespace isolp
