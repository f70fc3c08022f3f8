#include "isolp/oracle.hpp"

#include <functional>
#include <string>

namespace isolp::oracle {

namespace {

// Calls visit(map) for each isomorphism; stops when visit returns false.
void search(const WeightedGraph& a, const WeightedGraph& b, int limit,
            const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = a.size();
  if (n > limit) {
    throw InvalidInput("oracle: n = " + std::to_string(n) + " exceeds limit " +
                       std::to_string(limit));
  }
  if (b.size() != n) return;

  std::vector<int> deg_a(static_cast<std::size_t>(n)), deg_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg_a[static_cast<std::size_t>(v)] = a.degree(v);
    deg_b[static_cast<std::size_t>(v)] = b.degree(v);
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);

  std::function<bool(int)> extend = [&](int u) -> bool {
    if (u == n) return visit(map);
    for (int i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      if (deg_a[static_cast<std::size_t>(u)] != deg_b[static_cast<std::size_t>(i)]) continue;
      if (a.weight(u, u) != b.weight(i, i)) continue;
      bool consistent = true;
      for (int w = 0; w < u && consistent; ++w) {
        consistent = a.weight(u, w) == b.weight(i, map[static_cast<std::size_t>(w)]);
      }
      if (!consistent) continue;
      map[static_cast<std::size_t>(u)] = i;
      taken[static_cast<std::size_t>(i)] = 1;
      const bool keep_going = extend(u + 1);
      taken[static_cast<std::size_t>(i)] = 0;
      map[static_cast<std::size_t>(u)] = -1;
      if (!keep_going) return false;
    }
    return true;
  };
  extend(0);
}

}  // namespace

std::optional<Permutation> brute_force_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                   int limit) {
  std::optional<Permutation> found;
  search(a, b, limit, [&](const std::vector<int>& map) {
    found = Permutation(map);
    return false;
  });
  return found;
}

std::vector<Permutation> all_isomorphisms(const WeightedGraph& a, const WeightedGraph& b,
                                          int limit) {
  std::vector<Permutation> out;
  search(a, b, limit, [&](const std::vector<int>& map) {
    out.emplace_back(map);
    return true;
  });
  return out;
}

SparsityMask max_mask(const WeightedGraph& a, const WeightedGraph& b, int limit) {
  const int n = a.size();
  SparsityMask hit(n);
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  search(a, b, limit, [&](const std::vector<int>& map) {
    for (int j = 0; j < n; ++j) {
      seen[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(map[static_cast<std::size_t>(j)])] = 1;
    }
    return true;
  });
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!seen[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]) {
        hit.disallow(i, j, MaskOrigin::Oracle);
      }
    }
  }
  return hit;
}

}  // namespace isolp::oracle
