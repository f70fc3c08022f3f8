#pragma once

#include "isolp/graph.hpp"
#include "isolp/mask.hpp"

#include <optional>
#include <vector>

// Exhaustive isomorphism search for small graphs. Deliberately independent of
// the solver: only degree counts and already-assigned adjacency are used to
// cut the search.
namespace isolp::oracle {

constexpr int kDefaultLimit = 10;

// Lexicographically first isomorphism (map[u] = image of u in b), if any.
// Throws InvalidInput when n > limit.
std::optional<Permutation> brute_force_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                   int limit = kDefaultLimit);

// Every isomorphism from a to b, in lexicographic order.
std::vector<Permutation> all_isomorphisms(const WeightedGraph& a, const WeightedGraph& b,
                                          int limit = kDefaultLimit);

// allowed(i, j) iff some isomorphism maps j to i; all-false if none exists.
SparsityMask max_mask(const WeightedGraph& a, const WeightedGraph& b, int limit = kDefaultLimit);

}  // namespace isolp::oracle
