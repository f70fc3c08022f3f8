#include "isolp/pipeline.hpp"

#include "isolp/commutant.hpp"
#include "isolp/generators.hpp"
#include "isolp/polish.hpp"
#include "isolp/rng.hpp"
#include "isolp/spectrum.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>

namespace isolp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::uint64_t kPermuteStream = 0x9E12;
constexpr std::uint64_t kDirectionStream = 0xD1C7;

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic: return "isomorphic";
    case Verdict::NotIsomorphic: return "not_isomorphic";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(NonIsoReason r) {
  switch (r) {
    case NonIsoReason::None: return "none";
    case NonIsoReason::VertexCountMismatch: return "vertex_count_mismatch";
    case NonIsoReason::SpectraMismatch: return "spectra_mismatch";
    case NonIsoReason::MaskInfeasible: return "mask_infeasible";
    case NonIsoReason::WalkNormMismatch: return "walk_norm_mismatch";
  }
  return "none";
}

double SolveReport::success_fraction() const {
  if (restarts.empty()) return 0.0;
  const auto ok = std::count_if(restarts.begin(), restarts.end(),
                                [](const RestartRecord& r) { return r.verified; });
  return static_cast<double>(ok) / static_cast<double>(restarts.size());
}

std::uint64_t restart_seed(std::uint64_t seed, int t) {
  return seed + static_cast<std::uint64_t>(t);
}

SolveReport solve_gip(const WeightedGraph& a, const WeightedGraph& b, const SolveConfig& cfg) {
  if (cfg.restarts < 1) throw InvalidInput("solve_gip: restarts must be >= 1");
  const auto t0 = Clock::now();
  SolveReport report;
  auto finish = [&](Verdict v, NonIsoReason why) {
    report.verdict = v;
    report.reason = why;
    report.wall_time_s = seconds_since(t0);
    return report;
  };

  const int n = a.size();
  if (b.size() != n) return finish(Verdict::NotIsomorphic, NonIsoReason::VertexCountMismatch);

  const Spectrum sa = spectrum(a);
  const Spectrum sb = spectrum(b);
  const double spectra_tol = cfg.spectra_tol.value_or(default_spectra_tol(sa, sb));
  if (!spectra_equal(sa, sb, spectra_tol)) {
    return finish(Verdict::NotIsomorphic, NonIsoReason::SpectraMismatch);
  }

  SparsityMask mask(n);
  if (cfg.use_mask) {
    MaskOptions opts;
    opts.pruning = cfg.use_pruning;
    opts.tol = cfg.invariant_tol;
    mask = construct_mask(a, b, sa, sb, opts);
  }
  report.mask_allowed = mask.allowed_count();
  report.sparsity_ratio = mask.sparsity_ratio();
  if (mask.infeasible()) return finish(Verdict::NotIsomorphic, NonIsoReason::MaskInfeasible);
  if (mask.walk_mismatch()) return finish(Verdict::NotIsomorphic, NonIsoReason::WalkNormMismatch);

  const CommutantProjector projector(sa, sb);
  const double verify_tol = cfg.verify_tol.value_or(default_verify_tol(a, b));
  report.setup_time_s = seconds_since(t0);

  auto run_restart = [&](int t) {
    const auto start = Clock::now();
    RestartRecord rec;
    rec.index = t;
    rec.seed = restart_seed(cfg.seed, t);
    const Direction dir = sample_direction(n, rec.seed);
    RelaxedSolution sol = admm_solve(projector, mask, dir, cfg.admm);
    rec.converged = sol.converged;
    rec.iters = sol.iters;
    // Unconverged iterates are still polished; verification is exact.
    const Permutation candidate = hungarian_nearest_permutation(sol.p);
    rec.distance = (sol.p - candidate.matrix()).norm();
    rec.verified = verify_permutation(candidate, a, b, verify_tol);
    rec.trace = std::move(sol.trace);
    rec.wall_time_s = seconds_since(start);
    return std::pair{std::move(rec), candidate};
  };

  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const int batch = omp_in_parallel() ? 1 : std::max(1, threads);

  for (int first = 1; first <= cfg.restarts; first += batch) {
    const int count = std::min(batch, cfg.restarts - first + 1);
    std::vector<RestartRecord> records(static_cast<std::size_t>(count));
    std::vector<std::optional<Permutation>> candidates(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(batch) if (count > 1)
    for (int k = 0; k < count; ++k) {
      try {
        auto [rec, cand] = run_restart(first + k);
        records[static_cast<std::size_t>(k)] = std::move(rec);
        candidates[static_cast<std::size_t>(k)] = std::move(cand);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
    for (int k = 0; k < count; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (errors[uk]) {
        try {
          std::rethrow_exception(errors[uk]);
        } catch (const std::exception& e) {
          throw std::runtime_error("restart " + std::to_string(first + k) + ": " + e.what());
        }
      }
      report.restarts.push_back(std::move(records[uk]));
      if (report.restarts.back().verified) {
        report.permutation = std::move(candidates[uk]);
        return finish(Verdict::Isomorphic, NonIsoReason::None);
      }
    }
  }
  return finish(Verdict::Unknown, NonIsoReason::None);
}

SuccessEstimate estimate_success_rate(const WeightedGraph& a, int trials, std::uint64_t seed,
                                      const SolveConfig& cfg) {
  if (trials < 1) throw InvalidInput("estimate_success_rate: trials must be >= 1");
  std::vector<SolveReport> reports(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(trials));
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int t = 0; t < trials; ++t) {
    try {
      const auto [permuted, q] =
          random_permute(a, derive_seed(seed, kPermuteStream, static_cast<std::uint64_t>(t)));
      SolveConfig one = cfg;
      one.restarts = 1;
      one.seed = derive_seed(seed, kDirectionStream, static_cast<std::uint64_t>(t));
      reports[static_cast<std::size_t>(t)] = solve_gip(a, permuted, one);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SuccessEstimate est;
  est.trials = trials;
  double iters = 0.0;
  double wall = 0.0;
  double ratio = 0.0;
  for (const SolveReport& r : reports) {
    if (r.verdict == Verdict::Isomorphic) ++est.successes;
    for (const RestartRecord& rec : r.restarts) iters += rec.iters;
    wall += r.wall_time_s;
    ratio += r.sparsity_ratio;
    est.last_mask_allowed = r.mask_allowed;
  }
  est.mean_iters = iters / trials;
  est.mean_wall_time_s = wall / trials;
  est.mean_sparsity_ratio = ratio / trials;
  return est;
}

}  // namespace isolp
