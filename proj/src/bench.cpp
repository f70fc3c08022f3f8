#include "isolp/bench.hpp"

#include "isolp/commutant.hpp"
#include "isolp/generators.hpp"
#include "isolp/graph_io.hpp"
#include "isolp/mask.hpp"
#include "isolp/rng.hpp"
#include "isolp/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

namespace isolp::bench {

namespace {
constexpr std::uint64_t kGraphStream = 0x6A9;
constexpr std::uint64_t kTimingStream = 0x71E;
}  // namespace

bool family_ignores_size(const std::string& family) {
  return family == "frucht" || family == "petersen" || family.starts_with("file:");
}

WeightedGraph family_graph(const std::string& family, int n, std::uint64_t seed) {
  if (family == "r1n") {
    return erdos_renyi(n, 0.1, derive_seed(seed, kGraphStream, static_cast<std::uint64_t>(n)));
  }
  if (family == "g2n") {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side < 1 || side * side != n) throw InvalidInput("g2n size must be a perfect square");
    return grid2d(side, side);
  }
  if (family == "frucht") return frucht();
  if (family == "petersen") return petersen();
  if (family.starts_with("file:")) return read_graph_file(family.substr(5));
  throw InvalidInput("unknown benchmark family '" + family + "'");
}

BenchmarkRow run_benchmark_row(const std::string& family, int n, const BenchOptions& options) {
  const WeightedGraph g = family_graph(family, n, options.seed);
  BenchmarkRow row;
  row.family = family;
  row.n = g.size();
  row.trials = options.trials;

  // Sparsity of the mask for one permuted copy.
  {
    const auto [permuted, q] = random_permute(g, derive_seed(options.seed, kGraphStream, 0));
    MaskOptions mo;
    mo.pruning = options.pruning;
    const SparsityMask mask = construct_mask(g, permuted, spectrum(g), spectrum(permuted), mo);
    row.allowed = mask.allowed_count();
    row.sparsity_ratio = mask.sparsity_ratio();
  }
  if (options.trials <= 0) {
    row.success_no_mask = row.success_with_mask = std::numeric_limits<double>::quiet_NaN();
    row.mean_iters = row.mean_wall_time_s = std::numeric_limits<double>::quiet_NaN();
    return row;
  }

  SolveConfig cfg;
  cfg.admm = options.admm;
  cfg.use_pruning = options.pruning;
  cfg.threads = options.threads;

  cfg.use_mask = false;
  row.success_no_mask = estimate_success_rate(g, options.trials, options.seed, cfg).rate();
  cfg.use_mask = true;
  const SuccessEstimate with = estimate_success_rate(g, options.trials, options.seed, cfg);
  row.success_with_mask = with.rate();
  row.mean_iters = with.mean_iters;
  row.mean_wall_time_s = with.mean_wall_time_s;
  return row;
}

namespace {

void put_number(std::ostream& out, double v) {
  if (!std::isnan(v)) out << v;
}

}  // namespace

void write_bench_row(std::ostream& out, const BenchmarkRow& row) {
  out << row.family << ',' << row.n << ',';
  put_number(out, row.sparsity_ratio);
  out << ',' << row.allowed << ',' << row.trials << ',';
  put_number(out, row.success_no_mask);
  out << ',';
  put_number(out, row.success_with_mask);
  out << ',';
  put_number(out, row.mean_iters);
  out << ',';
  put_number(out, row.mean_wall_time_s);
  out << '\n';
}

TimingRow time_admm(int n, const TimingOptions& options) {
  using Clock = std::chrono::steady_clock;
  TimingRow row;
  row.n = n;
  row.repeats = options.repeats;
  row.min_total_time_s = std::numeric_limits<double>::infinity();
  double iters = 0.0;
  double total = 0.0;
  double per_iter = 0.0;
  for (int rep = 0; rep < options.repeats; ++rep) {
    const auto r = static_cast<std::uint64_t>(rep);
    const WeightedGraph g = erdos_renyi(n, 0.1, derive_seed(options.seed, kTimingStream, r));
    const auto [permuted, q] = random_permute(g, derive_seed(options.seed, kTimingStream + 1, r));
    const Spectrum sa = spectrum(g);
    const Spectrum sb = spectrum(permuted);
    SparsityMask mask(n);
    if (options.use_mask) mask = construct_mask(g, permuted, sa, sb);
    const CommutantProjector projector(sa, sb);
    const Direction dir = sample_direction(n, derive_seed(options.seed, kTimingStream + 2, r));

    const auto t0 = Clock::now();
    const RelaxedSolution sol = admm_solve(projector, mask, dir, options.admm);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    iters += sol.iters;
    total += secs;
    per_iter += secs / std::max(1, sol.iters);
    row.min_total_time_s = std::min(row.min_total_time_s, secs);
  }
  const double reps = std::max(1, options.repeats);
  row.mean_iters = iters / reps;
  row.total_time_s = total / reps;
  row.iter_time_s = per_iter / reps;
  return row;
}

void write_timing_row(std::ostream& out, const TimingRow& row) {
  out << row.n << ',' << row.repeats << ',' << row.mean_iters << ',' << row.iter_time_s << ','
      << row.total_time_s << ',' << row.min_total_time_s << '\n';
}

double loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw InvalidInput("loglog_slope needs at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace isolp::bench
