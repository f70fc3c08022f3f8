#pragma once

#include "isolp/graph.hpp"

#include <cstdint>
#include <utility>

namespace isolp {

// Simple undirected 0/1 graph, each unordered pair an edge with probability p.
WeightedGraph erdos_renyi(int n, double p, std::uint64_t seed);
// rows x cols lattice; vertex (r, c) has index r * cols + c.
WeightedGraph grid2d(int rows, int cols);
// Asymmetric cubic graph on 12 vertices (LCF [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]).
WeightedGraph frucht();
WeightedGraph petersen();

WeightedGraph empty_graph(int n);
WeightedGraph complete_graph(int n);
WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
// K_{1,leaves}; the centre is vertex 0.
WeightedGraph star_graph(int leaves);
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);
// Uniform labelled tree via a Pruefer sequence.
WeightedGraph random_tree(int n, std::uint64_t seed);

// Random symmetric weighted graph whose adjacency matrix has well separated
// eigenvalues and no eigenvector orthogonal to the all-ones vector. Candidates
// are resampled until both gaps exceed `margin`.
WeightedGraph friendly_weighted(int n, std::uint64_t seed, double margin = 1e-2);

Permutation random_permutation(int n, std::uint64_t seed);

// (Q A Q^T, Q) for a uniformly random Q.
std::pair<WeightedGraph, Permutation> random_permute(const WeightedGraph& g, std::uint64_t seed);

}  // namespace isolp
