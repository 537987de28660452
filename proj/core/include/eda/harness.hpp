#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eda/iboa.hpp"
#include "eda/problems.hpp"
#include "eda/run_result.hpp"

namespace eda {

enum class AlgorithmId { kIboa, kBoa, kPbil, kCga, kDtree };

std::string algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(const std::string& name);

// Knobs forwarded to the underlying drivers. max_generations == 0 means the
// problem size n. For incremental algorithms (iboa, cga, pbil) the iteration
// budget is max_generations * N; for population algorithms (boa, dtree) it
// is max_generations generations.
struct RunnerOptions {
  int tournament_size = 4;
  UpdateStrategy strategy = UpdateStrategy::kPeriodicStructure;
  std::uint64_t max_generations = 0;
  // PBIL-specific
  int pbil_selection_count = 2;
  double pbil_learning_rate = 0.005;
  // dependency-tree-specific
  int dtree_selection_count = 2;
  double dtree_alpha = 0.99;
  double dtree_initial_count = 1000.0;
};

// A population-size-parameterized algorithm under harness control. `pop` is
// the knob bisection varies: virtual population for iboa/cga, population
// size for boa, samples per iteration for pbil/dtree.
struct Runner {
  std::string name;
  std::function<RunResult(const Problem&, std::uint64_t pop, std::uint64_t seed)> run;
};

Runner make_runner(AlgorithmId id, const RunnerOptions& options = {});

struct BatchResult {
  std::uint64_t population = 0;
  int runs_executed = 0;
  int successes = 0;
  std::vector<RunResult> results;  // in run-index order
};

// Executes up to `runs` independent runs with seeds derived from
// (seed, phase, run index). When early_stop is set, stops after the first
// failure (an all-successes outcome is already impossible). Runs may execute
// concurrently on `threads` workers; results are aggregated in index order,
// so the outcome never depends on scheduling.
BatchResult run_batch(const Runner& runner, const Problem& problem,
                      std::uint64_t pop, std::uint64_t seed, std::uint64_t phase,
                      int runs, int threads, bool early_stop);

struct BisectionOptions {
  std::uint64_t initial_population = 16;
  std::uint64_t population_cap = std::uint64_t{1} << 22;
  double interval_ratio = 1.1;
  int runs_per_batch = 10;
  int threads = 0;  // 0: hardware concurrency, capped at runs_per_batch
};

struct ProbeRecord {
  std::uint64_t population;
  int successes;
  int runs;
};

struct BisectionResult {
  std::string algorithm;
  std::string problem;
  int n = 0;
  bool solved = false;
  std::uint64_t n_min = 0;        // 0 when unsolvable at cap
  std::uint64_t last_failure = 0; // largest probed population that failed
  std::vector<std::uint64_t> evaluations_per_success;  // validation batch
  double mean_evaluations = 0.0;
  std::vector<RunResult> validation_results;
  std::vector<ProbeRecord> probes;
};

// Doubling from `initial_population` until a size reaches runs_per_batch
// successes out of runs_per_batch, then binary search until hi/lo is within
// `interval_ratio`, then a fresh validation batch at the final size.
BisectionResult bisect_population(const Runner& runner, const Problem& problem,
                                  std::uint64_t seed,
                                  const BisectionOptions& options = {});

struct SweepRow {
  std::string algorithm;
  std::string problem;
  int n = 0;
  int rep = 0;
  std::uint64_t n_min = 0;
  int run_index = 0;
  std::uint64_t evaluations = 0;
  bool success = false;
};

struct ScalingResult {
  std::vector<SweepRow> rows;
  std::vector<std::pair<int, double>> mean_evaluations;  // per solvable n
  bool all_solved = false;
  std::optional<double> exponent;
  std::optional<double> intercept;
};

// Per problem size: `repetitions` independent bisections, each contributing
// its validation batch. The exponent is the least-squares slope of
// log(mean evaluations) against log(n), present only when every size was
// solvable and at least 3 sizes were given.
ScalingResult scaling_sweep(const Runner& runner, const std::string& problem_name,
                            const std::vector<int>& n_list, int repetitions,
                            std::uint64_t seed,
                            const BisectionOptions& options = {});

struct PowerFit {
  double slope = 0.0;
  double intercept = 0.0;  // of the log-log line
};

// Ordinary least squares of log(y) on log(x). Requires >= 3 points with
// positive coordinates.
PowerFit fit_exponent(const std::vector<std::pair<double, double>>& points);

// Exact column set: algorithm,problem,n,rep,N_min,run_index,evaluations,success
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace eda
