#include "isolp/generators.hpp"
#include "isolp/mask.hpp"
#include "isolp/oracle.hpp"
#include "isolp/rng.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace isolp;

namespace {

std::set<std::pair<int, int>> disallowed(const SparsityMask& m) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (!m.allowed(i, j)) out.emplace(i, j);
    }
  }
  return out;
}

SparsityMask full_mask(const WeightedGraph& a, const WeightedGraph& b, bool pruning) {
  MaskOptions opts;
  opts.pruning = pruning;
  return construct_mask(a, b, spectrum(a), spectrum(b), opts);
}

}  // namespace

TEST_CASE("mask bookkeeping") {
  SparsityMask m(3);
  CHECK(m.allowed_count() == 9);
  CHECK_FALSE(m.infeasible());
  m.disallow(0, 1, MaskOrigin::Degree);
  m.disallow(0, 1, MaskOrigin::Spectral);
  CHECK(m.origin(0, 1) == MaskOrigin::Degree);
  m.disallow(0, 0, MaskOrigin::Pruning);
  CHECK_FALSE(m.infeasible());
  m.disallow(0, 2, MaskOrigin::Pruning);
  CHECK(m.infeasible());  // row 0 is empty
  CHECK(m.sparsity_ratio() == doctest::Approx(6.0 / 9.0));

  SparsityMask col(2);
  col.disallow(0, 1, MaskOrigin::Degree);
  col.disallow(1, 1, MaskOrigin::Degree);
  CHECK(col.infeasible());  // column 1 is empty

  std::ostringstream out;
  SparsityMask p(2);
  p.disallow(0, 1, MaskOrigin::Degree);
  p.disallow(1, 0, MaskOrigin::Degree);
  write_mask(out, p);
  CHECK(out.str() == "1 0\n0 1\nallowed=2 ratio=0.5\n");
}

TEST_CASE("degree mask") {
  // Regular graphs: every walk count is the same on both sides.
  const WeightedGraph f = frucht();
  const WeightedGraph fp = random_permute(f, 4).first;
  CHECK(degree_mask(f, fp, 1e-6, 1).allowed_count() == 144);
  CHECK(degree_mask(f, fp).allowed_count() == 144);

  // P3: A1 = (1, 2, 1) separates the centre from the ends.
  const WeightedGraph p3 = path_graph(3);
  const std::set<std::pair<int, int>> expected = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  CHECK(disallowed(degree_mask(p3, p3, 1e-6, 1)) == expected);
  CHECK(disallowed(degree_mask(p3, p3)) == expected);

  // Cospectral pair with disjoint degree sets.
  const WeightedGraph star = star_graph(4);
  const WeightedGraph c4k1 = disjoint_union(cycle_graph(4), empty_graph(1));
  const SparsityMask m = degree_mask(star, c4k1);
  CHECK(m.allowed_count() == 0);
  CHECK(m.infeasible());
  CHECK(m.walk_mismatch());

  CHECK_THROWS_AS(degree_mask(p3, path_graph(4)), InvalidInput);
}

TEST_CASE("degree mask uses self-loop weights") {
  Eigen::MatrixXd a = path_graph(3).adjacency();
  a(0, 0) = 1.0;
  const WeightedGraph looped(a);
  const SparsityMask m = degree_mask(looped, looped, 1e-6, 1);
  // Vertex 0 is the only looped one; 0 and 2 become distinguishable.
  CHECK_FALSE(m.allowed(0, 2));
  CHECK_FALSE(m.allowed(2, 0));
  CHECK(m.allowed(0, 0));
}

TEST_CASE("walk lengths beyond n add nothing") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int n = 4 + static_cast<int>(s % 9);
    const WeightedGraph g = erdos_renyi(n, 0.35, s);
    const WeightedGraph h = random_permute(g, s + 100).first;
    CHECK(degree_mask(g, h, 1e-6, n) == degree_mask(g, h, 1e-6, 2 * n));
  }
}

TEST_CASE("walk vectors do not overflow on large dense graphs") {
  const WeightedGraph g = erdos_renyi(300, 0.5, 1);
  const WeightedGraph h = random_permute(g, 2).first;
  const SparsityMask m = degree_mask(g, h);
  CHECK_FALSE(m.walk_mismatch());
  CHECK_FALSE(m.infeasible());
}

TEST_CASE("spectral mask") {
  const Spectrum e = spectrum(empty_graph(4));
  CHECK(spectral_mask(e, e).allowed_count() == 16);

  const WeightedGraph p3 = path_graph(3);
  const Spectrum sp = spectrum(p3);
  const auto spec = disallowed(spectral_mask(sp, sp));
  for (const auto& ij : disallowed(degree_mask(p3, p3))) CHECK(spec.count(ij) == 1);

  const WeightedGraph pet = petersen();
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Spectrum a = spectrum(pet);
    const Spectrum b = spectrum(random_permute(pet, s).first);
    CHECK(spectral_mask(a, b).allowed_count() == 100);
  }

  CHECK_THROWS_AS(spectral_mask(sp, spectrum(path_graph(4))), InvalidInput);
}

TEST_CASE("degree and spectral masks are not nested") {
  // Regular graph: walks see nothing, projector diagonals separate vertices.
  const WeightedGraph f = frucht();
  const Spectrum sf = spectrum(f);
  CHECK(degree_mask(f, f).allowed_count() == 144);
  CHECK(spectral_mask(sf, sf).allowed_count() < 144);

  // Walk vectors are combinations of projector row sums, so the walk mask
  // can only see more when distinct eigenvalues share a group. A coarse
  // grouping tolerance produces exactly that.
  const WeightedGraph p3 = path_graph(3);
  const Spectrum coarse = spectrum(p3, 3.0);
  REQUIRE(coarse.groups().size() == 1);
  CHECK(spectral_mask(coarse, coarse).allowed_count() == 9);
  CHECK(degree_mask(p3, p3).allowed_count() == 5);
}

TEST_CASE("pruning") {
  const WeightedGraph e = empty_graph(3);
  CHECK(prune(SparsityMask(3), e, e).allowed_count() == 9);

  const WeightedGraph p3 = path_graph(3);
  const SparsityMask dm = degree_mask(p3, p3, 1e-6, 1);
  CHECK(dm.allowed_count() == 5);
  CHECK(prune(dm, p3, p3) == dm);

  const WeightedGraph star = star_graph(3);
  const WeightedGraph tri_k1 = disjoint_union(cycle_graph(3), empty_graph(1));
  CHECK(prune(degree_mask(star, tri_k1, 1e-6, 1), star, tri_k1).infeasible());

  // Edge weights must match: a path with weights (1, 2) has no automorphism
  // swapping its ends, which walk counts alone cannot see at k = 1.
  const std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 2.0}};
  const WeightedGraph wp = WeightedGraph::from_edges(3, edges);
  SparsityMask all(3);
  const SparsityMask pruned = prune(all, wp, wp);
  CHECK_FALSE(pruned.allowed(0, 2));
  CHECK_FALSE(pruned.allowed(2, 0));
  CHECK(pruned.allowed(0, 0));
}

TEST_CASE("pruning is monotone and idempotent (property)") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    CounterRng rng(s);
    const int n = 3 + static_cast<int>(rng.below(8));
    const WeightedGraph g = erdos_renyi(n, 0.4, s);
    const WeightedGraph h = random_permute(g, s + 7).first;
    SparsityMask m(n);
    for (int k = 0; k < n; ++k) {
      m.disallow(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)), MaskOrigin::Degree);
    }
    const SparsityMask once = prune(m, g, h);
    CHECK(once.subset_of(m));
    CHECK(prune(once, g, h) == once);
  }
}

TEST_CASE("construct_mask on the named graphs") {
  const WeightedGraph f = frucht();
  const WeightedGraph pet = petersen();
  for (std::uint64_t s = 0; s < 5; ++s) {
    const WeightedGraph fp = random_permute(f, s).first;
    CHECK(full_mask(f, fp, false).allowed_count() == 14);
    // Pruning closes the gap to the single isomorphism.
    const SparsityMask pruned = full_mask(f, fp, true);
    CHECK(pruned.allowed_count() == 12);
    CHECK(pruned == oracle::max_mask(f, fp, 12));

    const WeightedGraph pp = random_permute(pet, s).first;
    CHECK(full_mask(pet, pp, true).allowed_count() == 100);
  }

  MaskOptions off;
  off.degree = off.spectral = off.pruning = false;
  const WeightedGraph p3 = path_graph(3);
  CHECK(construct_mask(p3, p3, spectrum(p3), spectrum(p3), off).allowed_count() == 9);
}

TEST_CASE("mask is sound against exhaustive search (property)") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const int n = 2 + static_cast<int>(s % 6);
    const WeightedGraph g = erdos_renyi(n, 0.5, s);
    const WeightedGraph h = random_permute(g, s + 1000).first;
    const SparsityMask exact = oracle::max_mask(g, h);
    CHECK(exact.subset_of(full_mask(g, h, true)));
    CHECK(exact.subset_of(full_mask(g, h, false)));
  }
}
