#include "isolp/generators.hpp"
#include "isolp/spectrum.hpp"

#include <doctest.h>

#include <vector>

using namespace isolp;

namespace {

std::vector<std::pair<double, int>> summary(const Spectrum& s) {
  std::vector<std::pair<double, int>> out;
  for (const EigenGroup& g : s.groups()) out.emplace_back(g.value, g.multiplicity());
  return out;
}

void check_invariants(const WeightedGraph& g) {
  const Spectrum s = spectrum(g);
  const int n = g.size();
  const Eigen::MatrixXd& a = g.adjacency();
  const double scale = 1.0 + a.norm();
  int total = 0;
  Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd identity = Eigen::MatrixXd::Zero(n, n);
  double previous = -INFINITY;
  for (const EigenGroup& grp : s.groups()) {
    total += grp.multiplicity();
    CHECK(grp.value - previous > s.grouping_tol());
    previous = grp.value;
    CHECK((a * grp.basis - grp.value * grp.basis).norm() <= 1e-8 * scale);
    const Eigen::MatrixXd gram = grp.basis.transpose() * grp.basis;
    CHECK((gram - Eigen::MatrixXd::Identity(grp.multiplicity(), grp.multiplicity())).norm() <= 1e-10);
    rebuilt += grp.value * grp.basis * grp.basis.transpose();
    identity += grp.basis * grp.basis.transpose();
  }
  CHECK(total == n);
  CHECK((rebuilt - a).norm() <= 1e-8 * scale);
  CHECK((identity - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-8);
}

}  // namespace

TEST_CASE("spectrum of small closed-form graphs") {
  const auto edgeless = summary(spectrum(empty_graph(3)));
  REQUIRE(edgeless.size() == 1);
  CHECK(edgeless[0].first == doctest::Approx(0.0));
  CHECK(edgeless[0].second == 3);

  const auto p2 = summary(spectrum(path_graph(2)));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].first == doctest::Approx(-1.0));
  CHECK(p2[1].first == doctest::Approx(1.0));
  CHECK(p2[0].second == 1);
  CHECK(p2[1].second == 1);

  const auto star = summary(spectrum(star_graph(4)));
  REQUIRE(star.size() == 3);
  CHECK(star[0].first == doctest::Approx(-2.0));
  CHECK(star[1].first == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(star[1].second == 3);
  CHECK(star[2].first == doctest::Approx(2.0));

  const auto pet = summary(spectrum(petersen()));
  REQUIRE(pet.size() == 3);
  CHECK(pet[0].first == doctest::Approx(-2.0));
  CHECK(pet[0].second == 4);
  CHECK(pet[1].first == doctest::Approx(1.0));
  CHECK(pet[1].second == 5);
  CHECK(pet[2].first == doctest::Approx(3.0));
  CHECK(pet[2].second == 1);
}

TEST_CASE("spectrum invariants hold for generator outputs") {
  check_invariants(frucht());
  check_invariants(petersen());
  check_invariants(grid2d(4, 5));
  check_invariants(erdos_renyi(40, 0.1, 2));
  check_invariants(friendly_weighted(8, 3));
  check_invariants(cycle_graph(9));
  check_invariants(random_tree(20, 4));
  check_invariants(empty_graph(1));
}

TEST_CASE("spectra_equal") {
  const Spectrum f = spectrum(frucht());
  CHECK(spectra_equal(f, f, 1e-8));
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Spectrum fp = spectrum(random_permute(frucht(), s).first);
    CHECK(spectra_equal(f, fp, default_spectra_tol(f, fp)));
  }
  // Eigenvalue 2 is simple in C6 and double in two triangles.
  const Spectrum c6 = spectrum(cycle_graph(6));
  const Spectrum tri2 = spectrum(disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK_FALSE(spectra_equal(c6, tri2, default_spectra_tol(c6, tri2)));
  // Cospectral but not isomorphic.
  const Spectrum star = spectrum(star_graph(4));
  const Spectrum c4k1 = spectrum(disjoint_union(cycle_graph(4), empty_graph(1)));
  CHECK(spectra_equal(star, c4k1, default_spectra_tol(star, c4k1)));

  CHECK_THROWS_AS(spectra_equal(f, c6, 1e-6), InvalidInput);
}

TEST_CASE("grouping chains close eigenvalues") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 1.0 + 4e-7;
  d(2, 2) = 1.0 + 8e-7;  // 8e-7 from the first, but chained through the middle
  const Spectrum s = spectrum(WeightedGraph(d), 5e-7);
  CHECK(s.groups().size() == 1);
  CHECK(spectrum(WeightedGraph(d), 1e-7).groups().size() == 3);
}
