#pragma once

#include "isolp/graph.hpp"

#include <Eigen/Dense>

namespace isolp {

// Closest permutation matrix to `p` in Frobenius norm, found as the linear
// assignment maximising sum_j p(map[j], j). O(n^3) shortest augmenting path
// Hungarian method. Among equally good augmentations an unassigned column is
// preferred, then the lowest index, so the all-ties matrix maps to identity.
// Throws InvalidInput on non-square or non-finite input.
Permutation hungarian_nearest_permutation(const Eigen::MatrixXd& p);

// True iff b(p[u], p[v]) equals a(u, v) within tol for every u, v.
bool verify_permutation(const Permutation& p, const WeightedGraph& a, const WeightedGraph& b,
                        double tol = 0.0);

// 0 for integral weights, 1e-8 * (1 + max |w|) otherwise.
double default_verify_tol(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace isolp
