#pragma once

#include "isolp/admm.hpp"
#include "isolp/graph.hpp"
#include "isolp/pipeline.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isolp::bench {

// One line of the success-rate table. Rates are NaN when trials == 0;
// mean_iters and mean_wall_time_s describe the with-mask runs.
struct BenchmarkRow {
  std::string family;
  int n = 0;
  double sparsity_ratio = 1.0;
  long long allowed = 0;
  int trials = 0;
  double success_no_mask = 0.0;
  double success_with_mask = 0.0;
  double mean_iters = 0.0;
  double mean_wall_time_s = 0.0;
};

struct BenchOptions {
  int trials = 50;
  std::uint64_t seed = 1;
  // Off by default so rows report the plain degree/spectral mask.
  bool pruning = false;
  AdmmParams admm;
  int threads = 0;
};

// Families: "r1n" (Erdos-Renyi, p = 0.1), "g2n" (square grid, n must be a
// perfect square), "frucht", "petersen", "file:<path>". Throws InvalidInput
// for anything else.
WeightedGraph family_graph(const std::string& family, int n, std::uint64_t seed);
bool family_ignores_size(const std::string& family);

BenchmarkRow run_benchmark_row(const std::string& family, int n, const BenchOptions& options);

inline constexpr const char* kBenchHeader =
    "family,n,sparsity_ratio,allowed,trials,success_no_mask,success_with_mask,mean_iters,"
    "mean_wall_time_s";
void write_bench_row(std::ostream& out, const BenchmarkRow& row);

struct TimingRow {
  int n = 0;
  int repeats = 0;
  double mean_iters = 0.0;
  double iter_time_s = 0.0;      // mean seconds per ADMM iteration
  double total_time_s = 0.0;     // mean seconds per solve
  double min_total_time_s = 0.0;
};

struct TimingOptions {
  int repeats = 3;
  std::uint64_t seed = 1;
  bool use_mask = true;
  AdmmParams admm;
};

// Times admm_solve alone (no polishing, no setup) on an R1N pair of size n.
TimingRow time_admm(int n, const TimingOptions& options);

inline constexpr const char* kTimingHeader =
    "n,repeats,mean_iters,iter_time_s,total_time_s,min_total_time_s";
void write_timing_row(std::ostream& out, const TimingRow& row);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const std::pair<double, double>> points);

}  // namespace isolp::bench
