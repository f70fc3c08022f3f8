#include "isolp/polish.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace isolp {

Permutation hungarian_nearest_permutation(const Eigen::MatrixXd& p) {
  if (p.rows() != p.cols()) throw InvalidInput("polish: matrix must be square");
  if (!p.allFinite()) throw InvalidInput("polish: matrix has non-finite entries");
  const int n = static_cast<int>(p.rows());
  if (n == 0) return Permutation(std::vector<int>{});

  // Workers are vertices of the first graph (columns of p), jobs are vertices
  // of the second (rows of p). cost(worker, job) = -p(job, worker).
  // 1-based arrays; index 0 is the virtual root of each search.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto N = static_cast<std::size_t>(n) + 1;
  std::vector<double> u(N, 0.0), v(N, 0.0), minv(N);
  std::vector<int> owner(N, 0), way(N, 0);
  std::vector<char> used(N);

  for (int worker = 1; worker <= n; ++worker) {
    owner[0] = worker;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = owner[static_cast<std::size_t>(j0)];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (used[uj]) continue;
        const double cur = -p(j - 1, i0 - 1) - u[static_cast<std::size_t>(i0)] - v[uj];
        if (cur < minv[uj]) {
          minv[uj] = cur;
          way[uj] = j0;
        }
        const bool better = minv[uj] < delta;
        const bool tie_to_free = minv[uj] == delta && j1 != 0 && owner[uj] == 0 &&
                                 owner[static_cast<std::size_t>(j1)] != 0;
        if (better || tie_to_free) {
          delta = minv[uj];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (used[uj]) {
          u[static_cast<std::size_t>(owner[uj])] += delta;
          v[uj] -= delta;
        } else {
          minv[uj] -= delta;
        }
      }
      j0 = j1;
    } while (owner[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      owner[static_cast<std::size_t>(j0)] = owner[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> map(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    map[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  return Permutation(std::move(map));
}

bool verify_permutation(const Permutation& p, const WeightedGraph& a, const WeightedGraph& b,
                        double tol) {
  const int n = a.size();
  if (b.size() != n || p.size() != n) throw InvalidInput("verify_permutation: size mismatch");
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (std::abs(b.weight(p[u], p[v]) - a.weight(u, v)) > tol) return false;
    }
  }
  return true;
}

double default_verify_tol(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.is_integral() && b.is_integral()) return 0.0;
  return 1e-8 * (1.0 + std::max(a.max_abs_weight(), b.max_abs_weight()));
}

}  // namespace isolp
