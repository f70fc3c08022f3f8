#include "isolp/generators.hpp"
#include "isolp/oracle.hpp"
#include "isolp/pipeline.hpp"
#include "isolp/polish.hpp"
#include "isolp/report_json.hpp"

#include <doctest.h>

using namespace isolp;

TEST_CASE("frucht with mask succeeds on the first restart") {
  const WeightedGraph f = frucht();
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto [fp, q] = random_permute(f, s + 10);
    SolveConfig cfg;
    cfg.restarts = 10;
    cfg.seed = s;
    const SolveReport r = solve_gip(f, fp, cfg);
    REQUIRE(r.verdict == Verdict::Isomorphic);
    CHECK(r.reason == NonIsoReason::None);
    CHECK(r.admm_calls() == 1);
    CHECK(r.restarts[0].index == 1);
    CHECK(r.restarts[0].seed == restart_seed(s, 1));
    CHECK(*r.permutation == q);  // the isomorphism is unique
    CHECK(r.mask_allowed == 12);
  }
}

TEST_CASE("structural non-isomorphism verdicts") {
  const SolveReport spectra = solve_gip(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK(spectra.verdict == Verdict::NotIsomorphic);
  CHECK(spectra.reason == NonIsoReason::SpectraMismatch);
  CHECK(spectra.admm_calls() == 0);
  CHECK_FALSE(spectra.permutation.has_value());

  const SolveReport mask = solve_gip(star_graph(4), disjoint_union(cycle_graph(4), empty_graph(1)));
  CHECK(mask.verdict == Verdict::NotIsomorphic);
  CHECK(mask.reason == NonIsoReason::MaskInfeasible);
  CHECK(mask.admm_calls() == 0);

  const SolveReport sizes = solve_gip(path_graph(3), path_graph(4));
  CHECK(sizes.verdict == Verdict::NotIsomorphic);
  CHECK(sizes.reason == NonIsoReason::VertexCountMismatch);

  CHECK(to_string(Verdict::Isomorphic) == "isomorphic");
  CHECK(to_string(Verdict::NotIsomorphic) == "not_isomorphic");
  CHECK(to_string(Verdict::Unknown) == "unknown");
  CHECK(to_string(NonIsoReason::SpectraMismatch) == "spectra_mismatch");
  CHECK(to_string(NonIsoReason::MaskInfeasible) == "mask_infeasible");
  CHECK(to_string(NonIsoReason::WalkNormMismatch) == "walk_norm_mismatch");
}

TEST_CASE("unknown after exhausting restarts") {
  // Without a mask, one capped restart on the Frucht pair rarely verifies;
  // the verdict must then be Unknown, never NotIsomorphic.
  const WeightedGraph f = frucht();
  const WeightedGraph fp = random_permute(f, 1).first;
  SolveConfig cfg;
  cfg.use_mask = false;
  cfg.restarts = 3;
  cfg.admm.max_iter = 5;
  const SolveReport r = solve_gip(f, fp, cfg);
  CHECK(r.verdict != Verdict::NotIsomorphic);
  if (r.verdict == Verdict::Unknown) {
    CHECK(r.admm_calls() == 3);
    CHECK(r.success_fraction() == 0.0);
    for (const RestartRecord& rec : r.restarts) CHECK_FALSE(rec.converged);
  }
}

TEST_CASE("reports are deterministic and monotone in restarts") {
  const WeightedGraph f = frucht();
  const WeightedGraph fp = random_permute(f, 5).first;
  SolveConfig cfg;
  cfg.use_mask = false;
  cfg.seed = 123;
  cfg.restarts = 8;
  const SolveReport a = solve_gip(f, fp, cfg);
  const SolveReport b = solve_gip(f, fp, cfg);
  CHECK(a.verdict == b.verdict);
  REQUIRE(a.admm_calls() == b.admm_calls());
  for (int t = 0; t < a.admm_calls(); ++t) {
    CHECK(a.restarts[t].verified == b.restarts[t].verified);
    CHECK(a.restarts[t].iters == b.restarts[t].iters);
    CHECK(a.restarts[t].distance == b.restarts[t].distance);
  }

  // Raising N never changes the outcome of the first restarts.
  cfg.restarts = 16;
  const SolveReport c = solve_gip(f, fp, cfg);
  const int common = std::min(a.admm_calls(), c.admm_calls());
  for (int t = 0; t < common; ++t) CHECK(a.restarts[t].verified == c.restarts[t].verified);
  if (a.verdict == Verdict::Isomorphic) {
    CHECK(c.verdict == Verdict::Isomorphic);
    CHECK(c.admm_calls() == a.admm_calls());
  }

  cfg.threads = 1;
  const SolveReport single = solve_gip(f, fp, cfg);
  CHECK(single.admm_calls() == c.admm_calls());
  CHECK(single.verdict == c.verdict);
}

TEST_CASE("no false verdicts on small pairs (property)") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 2 + static_cast<int>(s % 6);
    const WeightedGraph a = erdos_renyi(n, 0.5, s);
    const WeightedGraph b = (s % 2 == 0) ? random_permute(a, s + 1).first : erdos_renyi(n, 0.5, s + 1000);
    SolveConfig cfg;
    cfg.restarts = 5;
    cfg.seed = s;
    const SolveReport r = solve_gip(a, b, cfg);
    const bool iso = oracle::brute_force_isomorphism(a, b).has_value();
    if (r.verdict == Verdict::Isomorphic) {
      CHECK(iso);
      CHECK(verify_permutation(*r.permutation, a, b));
    }
    if (iso) CHECK(r.verdict != Verdict::NotIsomorphic);
  }
}

TEST_CASE("success rate on friendly graphs") {
  SolveConfig cfg;
  const SuccessEstimate est = estimate_success_rate(friendly_weighted(8, 3), 10, 4, cfg);
  CHECK(est.trials == 10);
  CHECK(est.rate() == 1.0);
  CHECK(est.mean_iters > 0.0);
}

TEST_CASE("json report") {
  const WeightedGraph f = frucht();
  const auto [fp, q] = random_permute(f, 2);
  SolveConfig cfg;
  cfg.seed = 9;
  const nlohmann::json j = report_to_json(solve_gip(f, fp, cfg), cfg.seed);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["verdict"] == "isomorphic");
  CHECK(j["reason"].is_null());
  CHECK(j["seed"] == 9);
  CHECK(j["restarts_used"] == 1);
  REQUIRE(j["permutation"].size() == 12);
  for (int u = 0; u < 12; ++u) CHECK(j["permutation"][u] == q[u] + 1);
  CHECK(j["mask"]["allowed"] == 12);
  CHECK(j["per_restart"][0]["verified"] == true);

  const nlohmann::json no = report_to_json(solve_gip(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))), 0);
  CHECK(no["verdict"] == "not_isomorphic");
  CHECK(no["reason"] == "spectra_mismatch");
  CHECK(no["permutation"].is_null());
}
