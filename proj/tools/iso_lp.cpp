// iso_lp: randomized LP heuristic for weighted graph isomorphism.
//
//   iso_lp solve A.g B.g [--restarts N] [--seed S] [--no-mask] [--no-pruning]
//                        [--tol T] [--max-iter M] [--serial] [--verbose]
//   iso_lp mask A.g B.g [--no-pruning]
//   iso_lp bench --family r1n --sizes 20,100 --trials 50 [--seed S] [--pruning] [--out F]
//   iso_lp timing --sizes 100,200,400,800 [--repeats 3] [--out F]
//   iso_lp generate FAMILY [--n N] [--seed S] [--permute-seed P] --out F
//
// solve exits 0 (isomorphic), 1 (not isomorphic), 2 (unknown); 64 for bad
// input and 70 for internal errors.

#include "isolp/bench.hpp"
#include "isolp/generators.hpp"
#include "isolp/graph_io.hpp"
#include "isolp/kernels.hpp"
#include "isolp/mask.hpp"
#include "isolp/pipeline.hpp"
#include "isolp/report_json.hpp"
#include "isolp/spectrum.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  std::cerr << "iso_lp: no --seed given, using seed " << s << '\n';
  return s;
}

// Writes to `path`, or stdout when path is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct SolveArgs {
  std::string a_path;
  std::string b_path;
  int restarts = 50;
  std::optional<std::uint64_t> seed;
  bool no_mask = false;
  bool no_pruning = false;
  std::optional<double> tol;
  int max_iter = 5000;
  bool serial = false;
  bool verbose = false;
};

int cmd_solve(const SolveArgs& args) {
  const isolp::WeightedGraph a = isolp::read_graph_file(args.a_path);
  const isolp::WeightedGraph b = isolp::read_graph_file(args.b_path);
  isolp::SolveConfig cfg;
  cfg.restarts = args.restarts;
  cfg.seed = resolve_seed(args.seed);
  cfg.use_mask = !args.no_mask;
  cfg.use_pruning = !args.no_pruning;
  cfg.admm.max_iter = args.max_iter;
  if (args.tol) cfg.admm.eps_primal = cfg.admm.eps_dual = *args.tol;
  if (args.serial) cfg.admm.backend = isolp::kernels::Backend::Serial;
  cfg.admm.record_trace = args.verbose;

  const isolp::SolveReport report = isolp::solve_gip(a, b, cfg);
  if (args.verbose) {
    for (const isolp::RestartRecord& r : report.restarts) {
      std::cerr << "# restart " << r.index << " seed " << r.seed << " converged " << r.converged
                << " verified " << r.verified << "\niter,primal,dual\n";
      for (const auto& s : r.trace) std::cerr << s.iter << ',' << s.primal << ',' << s.dual << '\n';
    }
  }
  std::cout << isolp::report_to_json(report, cfg.seed).dump(2) << '\n';
  switch (report.verdict) {
    case isolp::Verdict::Isomorphic: return 0;
    case isolp::Verdict::NotIsomorphic: return 1;
    case isolp::Verdict::Unknown: return 2;
  }
  return kExitInternal;
}

int cmd_mask(const std::string& a_path, const std::string& b_path, bool no_pruning) {
  const isolp::WeightedGraph a = isolp::read_graph_file(a_path);
  const isolp::WeightedGraph b = isolp::read_graph_file(b_path);
  if (a.size() != b.size()) {
    std::cerr << "iso_lp: graphs have different vertex counts\n";
    return 1;
  }
  const isolp::Spectrum sa = isolp::spectrum(a);
  const isolp::Spectrum sb = isolp::spectrum(b);
  if (!isolp::spectra_equal(sa, sb, isolp::default_spectra_tol(sa, sb))) {
    std::cerr << "iso_lp: spectra differ, no mask to build\n";
    return 1;
  }
  isolp::MaskOptions opts;
  opts.pruning = !no_pruning;
  isolp::write_mask(std::cout, isolp::construct_mask(a, b, sa, sb, opts));
  return 0;
}

struct BenchArgs {
  std::string family;
  std::vector<int> sizes;
  int trials = 50;
  std::optional<std::uint64_t> seed;
  bool pruning = false;
  int max_iter = 5000;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  isolp::bench::BenchOptions opts;
  opts.trials = args.trials;
  opts.seed = resolve_seed(args.seed);
  opts.pruning = args.pruning;
  opts.admm.max_iter = args.max_iter;
  std::vector<int> sizes = args.sizes;
  if (sizes.empty()) {
    if (!isolp::bench::family_ignores_size(args.family)) {
      throw isolp::InvalidInput("--sizes is required for family " + args.family);
    }
    sizes.push_back(0);
  }
  Output out(args.out);
  out.stream() << isolp::bench::kBenchHeader << '\n';
  for (int n : sizes) {
    isolp::bench::write_bench_row(out.stream(), isolp::bench::run_benchmark_row(args.family, n, opts));
    out.stream().flush();
  }
  return 0;
}

struct TimingArgs {
  std::vector<int> sizes;
  int repeats = 3;
  std::optional<std::uint64_t> seed;
  bool no_mask = false;
  int max_iter = 5000;
  bool serial = false;
  std::string out;
};

int cmd_timing(const TimingArgs& args) {
  isolp::bench::TimingOptions opts;
  opts.repeats = args.repeats;
  opts.seed = resolve_seed(args.seed);
  opts.use_mask = !args.no_mask;
  opts.admm.max_iter = args.max_iter;
  if (args.serial) opts.admm.backend = isolp::kernels::Backend::Serial;
  Output out(args.out);
  out.stream() << isolp::bench::kTimingHeader << '\n';
  for (int n : args.sizes) {
    isolp::bench::write_timing_row(out.stream(), isolp::bench::time_admm(n, opts));
    out.stream().flush();
  }
  return 0;
}

struct GenerateArgs {
  std::string family;
  int n = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> permute_seed;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  isolp::WeightedGraph g = isolp::bench::family_graph(args.family, args.n, args.seed);
  if (args.permute_seed) g = isolp::random_permute(g, *args.permute_seed).first;
  Output out(args.out);
  isolp::write_graph(out.stream(), g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  isolp::kernels::configure_threads_from_env();

  CLI::App app{"Randomized LP heuristic for weighted graph isomorphism"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether two graph files are isomorphic");
  solve_cmd->add_option("a", solve.a_path, "First graph file")->required();
  solve_cmd->add_option("b", solve.b_path, "Second graph file")->required();
  solve_cmd->add_option("--restarts", solve.restarts, "Random directions to try")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed, "Seed for all randomness");
  solve_cmd->add_flag("--no-mask", solve.no_mask, "Skip invariant-based sparsity constraints");
  solve_cmd->add_flag("--no-pruning", solve.no_pruning, "Skip neighbourhood pruning of the mask");
  solve_cmd->add_option("--tol", solve.tol, "ADMM primal/dual tolerance (scaled by n)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iter", solve.max_iter, "ADMM iteration cap")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--serial", solve.serial, "Use the serial reference kernels");
  solve_cmd->add_flag("--verbose", solve.verbose, "Residual traces as CSV on stderr");

  std::string mask_a, mask_b;
  bool mask_no_pruning = false;
  auto* mask_cmd = app.add_subcommand("mask", "Print the sparsity mask for a graph pair");
  mask_cmd->add_option("a", mask_a, "First graph file")->required();
  mask_cmd->add_option("b", mask_b, "Second graph file")->required();
  mask_cmd->add_flag("--no-pruning", mask_no_pruning, "Skip neighbourhood pruning");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Success rates with and without the mask (CSV)");
  bench_cmd->add_option("--family", bench.family, "r1n, g2n, frucht, petersen or file:<path>")
      ->required();
  bench_cmd->add_option("--sizes", bench.sizes, "Comma separated vertex counts")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per setting")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_flag("--pruning", bench.pruning, "Apply neighbourhood pruning to the mask");
  bench_cmd->add_option("--max-iter", bench.max_iter, "ADMM iteration cap")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");

  TimingArgs timing;
  auto* timing_cmd = app.add_subcommand("timing", "ADMM runtime versus graph size (CSV)");
  timing_cmd->add_option("--sizes", timing.sizes, "Comma separated vertex counts")
      ->delimiter(',')
      ->required();
  timing_cmd->add_option("--repeats", timing.repeats, "Solves per size")->check(CLI::PositiveNumber);
  timing_cmd->add_option("--seed", timing.seed, "Seed");
  timing_cmd->add_flag("--no-mask", timing.no_mask, "Time the unmasked problem");
  timing_cmd->add_option("--max-iter", timing.max_iter, "ADMM iteration cap")->check(CLI::PositiveNumber);
  timing_cmd->add_flag("--serial", timing.serial, "Use the serial reference kernels");
  timing_cmd->add_option("--out", timing.out, "CSV path (default stdout)");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a benchmark graph in the text format");
  gen_cmd->add_option("family", gen.family, "r1n, g2n, frucht, petersen")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count (r1n, g2n)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--permute-seed", gen.permute_seed, "Relabel vertices randomly");
  gen_cmd->add_option("--out", gen.out, "Graph path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*mask_cmd) return cmd_mask(mask_a, mask_b, mask_no_pruning);
    if (*bench_cmd) return cmd_bench(bench);
    if (*timing_cmd) return cmd_timing(timing);
    if (*gen_cmd) return cmd_generate(gen);
  } catch (const isolp::ParseError& e) {
    std::cerr << "iso_lp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const isolp::InvalidInput& e) {
    std::cerr << "iso_lp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "iso_lp: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
