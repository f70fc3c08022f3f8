#include "isolp/bench.hpp"
#include "isolp/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace isolp;

TEST_CASE("csv headers are fixed") {
  CHECK(std::string(bench::kBenchHeader) ==
        "family,n,sparsity_ratio,allowed,trials,success_no_mask,success_with_mask,mean_iters,"
        "mean_wall_time_s");
  CHECK(std::string(bench::kTimingHeader) ==
        "n,repeats,mean_iters,iter_time_s,total_time_s,min_total_time_s");
}

TEST_CASE("benchmark families") {
  CHECK(bench::family_graph("g2n", 16, 1) == grid2d(4, 4));
  CHECK(bench::family_graph("frucht", 0, 1) == frucht());
  CHECK(bench::family_graph("r1n", 20, 1) == bench::family_graph("r1n", 20, 1));
  CHECK(bench::family_graph("r1n", 20, 1).size() == 20);
  CHECK_THROWS_AS(bench::family_graph("g2n", 15, 1), InvalidInput);
  CHECK_THROWS_AS(bench::family_graph("cfi", 10, 1), InvalidInput);
  CHECK(bench::family_ignores_size("petersen"));
  CHECK_FALSE(bench::family_ignores_size("r1n"));
}

TEST_CASE("sparsity-only rows") {
  bench::BenchOptions opts;
  opts.trials = 0;
  const bench::BenchmarkRow frucht_row = bench::run_benchmark_row("frucht", 0, opts);
  CHECK(frucht_row.n == 12);
  CHECK(frucht_row.allowed == 14);
  CHECK(std::isnan(frucht_row.success_no_mask));
  std::ostringstream out;
  bench::write_bench_row(out, frucht_row);
  CHECK(out.str().rfind("frucht,12,", 0) == 0);
  CHECK(out.str().find(",0,,,,\n") != std::string::npos);

  CHECK(bench::run_benchmark_row("g2n", 16, opts).sparsity_ratio == doctest::Approx(0.375));
  CHECK(bench::run_benchmark_row("g2n", 64, opts).sparsity_ratio == doctest::Approx(0.109375));
  CHECK(bench::run_benchmark_row("petersen", 0, opts).sparsity_ratio == 1.0);

  opts.pruning = true;
  CHECK(bench::run_benchmark_row("frucht", 0, opts).allowed == 12);
}

TEST_CASE("small benchmark row") {
  bench::BenchOptions opts;
  opts.trials = 4;
  const bench::BenchmarkRow row = bench::run_benchmark_row("petersen", 0, opts);
  CHECK(row.trials == 4);
  CHECK(row.success_no_mask >= 0.0);
  CHECK(row.success_no_mask <= 1.0);
  CHECK(row.success_with_mask >= 0.0);
  CHECK(row.success_with_mask <= 1.0);
}

TEST_CASE("timing rows") {
  bench::TimingOptions opts;
  opts.repeats = 3;
  const bench::TimingRow row = bench::time_admm(20, opts);
  CHECK(row.n == 20);
  CHECK(row.repeats == 3);
  CHECK(row.mean_iters > 0.0);
  CHECK(row.min_total_time_s <= row.total_time_s);
  CHECK(row.iter_time_s > 0.0);
}

TEST_CASE("loglog slope") {
  const std::vector<std::pair<double, double>> cubic = {{1, 2}, {2, 16}, {4, 128}, {8, 1024}};
  CHECK(bench::loglog_slope(cubic) == doctest::Approx(3.0));
  const std::vector<std::pair<double, double>> one = {{1, 1}};
  CHECK_THROWS_AS(bench::loglog_slope(one), InvalidInput);
}
