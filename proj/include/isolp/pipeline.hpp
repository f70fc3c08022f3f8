#pragma once

#include "isolp/admm.hpp"
#include "isolp/graph.hpp"
#include "isolp/mask.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace isolp {

struct SolveConfig {
  int restarts = 50;
  std::uint64_t seed = 0;
  bool use_mask = true;
  bool use_pruning = true;
  AdmmParams admm;
  // Lemma tolerance for mask construction.
  double invariant_tol = 1e-6;
  // Unset: derived from the eigenvalue grouping tolerances.
  std::optional<double> spectra_tol;
  // Unset: default_verify_tol(a, b).
  std::optional<double> verify_tol;
  // Restarts evaluated concurrently; 0 = OpenMP default.
  int threads = 0;
};

enum class Verdict { Isomorphic, NotIsomorphic, Unknown };

enum class NonIsoReason {
  None,
  VertexCountMismatch,
  SpectraMismatch,
  MaskInfeasible,
  WalkNormMismatch,
};

std::string_view to_string(Verdict v);
std::string_view to_string(NonIsoReason r);

struct RestartRecord {
  int index = 0;  // 1-based
  std::uint64_t seed = 0;
  bool converged = false;
  int iters = 0;
  bool verified = false;
  double distance = 0.0;  // ||P* - polished||_F
  double wall_time_s = 0.0;
  std::vector<ResidualSample> trace;
};

struct SolveReport {
  Verdict verdict = Verdict::Unknown;
  NonIsoReason reason = NonIsoReason::None;
  std::optional<Permutation> permutation;
  std::vector<RestartRecord> restarts;
  long long mask_allowed = 0;
  double sparsity_ratio = 1.0;
  double setup_time_s = 0.0;
  double wall_time_s = 0.0;

  int admm_calls() const { return static_cast<int>(restarts.size()); }
  // Verified restarts / restarts run; estimates the per-restart success rate.
  double success_fraction() const;
};

// Restart t (1-based) draws its direction from seed + t.
std::uint64_t restart_seed(std::uint64_t seed, int t);

// Spectral precheck, mask construction, then up to cfg.restarts randomized
// LP solves with polishing. Restarts run in parallel batches; the earliest
// verified restart wins and later records are dropped, so the report does
// not depend on thread count. Errors from a restart are rethrown as
// std::runtime_error naming the restart index.
SolveReport solve_gip(const WeightedGraph& a, const WeightedGraph& b, const SolveConfig& cfg = {});

struct SuccessEstimate {
  int trials = 0;
  int successes = 0;
  double mean_iters = 0.0;
  double mean_wall_time_s = 0.0;
  double mean_sparsity_ratio = 1.0;
  long long last_mask_allowed = 0;

  double rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

// `trials` single-restart solves of (a, random_permute(a)), each with a fresh
// permutation and direction derived from `seed`. Trials run in parallel.
SuccessEstimate estimate_success_rate(const WeightedGraph& a, int trials, std::uint64_t seed,
                                      const SolveConfig& cfg);

}  // namespace isolp
