#include "eda/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "eda/boa.hpp"
#include "eda/cga.hpp"
#include "eda/dtree.hpp"
#include "eda/pbil.hpp"

namespace eda {
namespace {

constexpr std::uint64_t kBatchPhaseSearch = 1;
constexpr std::uint64_t kBatchPhaseValidate = 2;

int resolve_threads(int requested, int runs) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  return std::min(threads, runs);
}

}  // namespace

std::string algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kIboa:
      return "iboa";
    case AlgorithmId::kBoa:
      return "boa";
    case AlgorithmId::kPbil:
      return "pbil";
    case AlgorithmId::kCga:
      return "cga";
    case AlgorithmId::kDtree:
      return "dtree";
  }
  throw std::logic_error("algorithm_name: unknown id");
}

std::optional<AlgorithmId> parse_algorithm(const std::string& name) {
  if (name == "iboa") return AlgorithmId::kIboa;
  if (name == "boa") return AlgorithmId::kBoa;
  if (name == "pbil") return AlgorithmId::kPbil;
  if (name == "cga") return AlgorithmId::kCga;
  if (name == "dtree") return AlgorithmId::kDtree;
  return std::nullopt;
}

Runner make_runner(AlgorithmId id, const RunnerOptions& options) {
  Runner runner;
  runner.name = algorithm_name(id);
  switch (id) {
    case AlgorithmId::kIboa:
      runner.run = [options](const Problem& problem, std::uint64_t pop,
                             std::uint64_t seed) {
        IboaConfig config;
        config.n = problem.n;
        config.virtual_population = pop;
        config.tournament_size = options.tournament_size;
        config.strategy = options.strategy;
        config.max_generations = options.max_generations;
        config.seed = seed;
        return run_iboa(config, problem);
      };
      break;
    case AlgorithmId::kBoa:
      runner.run = [options](const Problem& problem, std::uint64_t pop,
                             std::uint64_t seed) {
        BoaConfig config;
        config.n = problem.n;
        config.population_size = static_cast<int>(pop);
        config.tournament_size = options.tournament_size;
        config.max_generations = options.max_generations;
        config.seed = seed;
        return run_boa(config, problem);
      };
      break;
    case AlgorithmId::kPbil:
      runner.run = [options](const Problem& problem, std::uint64_t pop,
                             std::uint64_t seed) {
        PbilConfig config;
        config.n = problem.n;
        config.samples_per_iteration = static_cast<int>(pop);
        config.selection_count = options.pbil_selection_count;
        config.learning_rate = options.pbil_learning_rate;
        const std::uint64_t gens = options.max_generations > 0
                                       ? options.max_generations
                                       : static_cast<std::uint64_t>(problem.n);
        config.max_iterations = gens * pop;
        config.seed = seed;
        return run_pbil(config, problem);
      };
      break;
    case AlgorithmId::kCga:
      runner.run = [options](const Problem& problem, std::uint64_t pop,
                             std::uint64_t seed) {
        CgaConfig config;
        config.n = problem.n;
        config.virtual_population = pop;
        const std::uint64_t gens = options.max_generations > 0
                                       ? options.max_generations
                                       : static_cast<std::uint64_t>(problem.n);
        config.max_iterations = gens * pop;
        config.seed = seed;
        return run_cga(config, problem);
      };
      break;
    case AlgorithmId::kDtree:
      runner.run = [options](const Problem& problem, std::uint64_t pop,
                             std::uint64_t seed) {
        DtreeConfig config;
        config.n = problem.n;
        config.samples_per_iteration = static_cast<int>(pop);
        config.selection_count = options.dtree_selection_count;
        config.alpha = options.dtree_alpha;
        config.initial_count = options.dtree_initial_count;
        config.max_generations = options.max_generations;
        config.seed = seed;
        return run_dtree_eda(config, problem);
      };
      break;
  }
  return runner;
}

BatchResult run_batch(const Runner& runner, const Problem& problem,
                      std::uint64_t pop, std::uint64_t seed, std::uint64_t phase,
                      int runs, int threads, bool early_stop) {
  BatchResult batch;
  batch.population = pop;
  auto seed_for = [&](int run_index) {
    return derive_seed(seed, {phase, pop, static_cast<std::uint64_t>(run_index)});
  };
  auto execute = [&](int run_index) {
    return runner.run(problem, pop, seed_for(run_index));
  };

  int next = 0;
  if (early_stop) {
    // Probe run 0 alone first: its failure already settles the batch.
    RunResult first = execute(0);
    batch.results.push_back(first);
    batch.runs_executed = 1;
    batch.successes = first.success ? 1 : 0;
    if (!first.success) return batch;
    next = 1;
  }

  const int workers = resolve_threads(threads, runs - next);
  if (workers <= 1) {
    for (int r = next; r < runs; ++r) {
      RunResult result = execute(r);
      batch.results.push_back(result);
      ++batch.runs_executed;
      batch.successes += result.success ? 1 : 0;
      if (early_stop && !result.success) return batch;
    }
    return batch;
  }

  std::vector<std::future<RunResult>> futures;
  futures.reserve(static_cast<std::size_t>(runs - next));
  for (int r = next; r < runs; ++r) {
    futures.push_back(std::async(std::launch::async, execute, r));
  }
  for (auto& f : futures) {
    RunResult result = f.get();
    batch.results.push_back(std::move(result));
    ++batch.runs_executed;
  }
  batch.successes = 0;
  for (const RunResult& r : batch.results) batch.successes += r.success ? 1 : 0;
  return batch;
}

BisectionResult bisect_population(const Runner& runner, const Problem& problem,
                                  std::uint64_t seed,
                                  const BisectionOptions& options) {
  BisectionResult out;
  out.algorithm = runner.name;
  out.problem = problem.name;
  out.n = problem.n;

  const int runs = options.runs_per_batch;
  auto probe = [&](std::uint64_t pop, std::uint64_t phase, bool early_stop) {
    BatchResult batch = run_batch(runner, problem, pop, seed, phase, runs,
                                  options.threads, early_stop);
    out.probes.push_back(ProbeRecord{pop, batch.successes, batch.runs_executed});
    return batch;
  };
  auto all_pass = [&](const BatchResult& batch) {
    return batch.successes == runs;
  };

  // Doubling phase.
  std::uint64_t lo = 0;  // largest failing population seen (0: none yet)
  std::uint64_t hi = 0;  // smallest passing population
  for (std::uint64_t pop = options.initial_population;;) {
    BatchResult batch = probe(pop, kBatchPhaseSearch, true);
    if (all_pass(batch)) {
      hi = pop;
      break;
    }
    lo = pop;
    if (pop >= options.population_cap) break;
    pop = std::min(pop * 2, options.population_cap);
  }
  out.last_failure = lo;
  if (hi == 0) {
    out.solved = false;  // unsolvable at cap
    return out;
  }

  // Binary search until the bracket is tight.
  while (lo > 0 &&
         static_cast<double>(hi) / static_cast<double>(lo) > options.interval_ratio &&
         hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    BatchResult batch = probe(mid, kBatchPhaseSearch, true);
    if (all_pass(batch)) {
      hi = mid;
    } else {
      lo = mid;
      out.last_failure = std::max(out.last_failure, mid);
    }
  }

  // Fresh validation batch at the final size; escalate on a failed recheck.
  for (;;) {
    BatchResult batch = probe(hi, kBatchPhaseValidate, false);
    if (all_pass(batch)) {
      out.solved = true;
      out.n_min = hi;
      out.validation_results = std::move(batch.results);
      out.evaluations_per_success.reserve(out.validation_results.size());
      double total = 0.0;
      for (const RunResult& r : out.validation_results) {
        out.evaluations_per_success.push_back(r.evaluations);
        total += static_cast<double>(r.evaluations);
      }
      out.mean_evaluations = total / static_cast<double>(out.validation_results.size());
      return out;
    }
    out.last_failure = std::max(out.last_failure, hi);
    if (hi >= options.population_cap) {
      out.solved = false;
      return out;
    }
    hi = std::min(options.population_cap,
                  std::max(hi + 1, hi + (hi + 9) / 10));  // grow ~10%
  }
}

ScalingResult scaling_sweep(const Runner& runner, const std::string& problem_name,
                            const std::vector<int>& n_list, int repetitions,
                            std::uint64_t seed,
                            const BisectionOptions& options) {
  ScalingResult out;
  out.all_solved = true;
  for (int n : n_list) {
    const Problem problem = make_problem(problem_name, n);
    double evaluation_sum = 0.0;
    std::uint64_t success_count = 0;
    bool size_solved = true;
    for (int rep = 0; rep < repetitions; ++rep) {
      const std::uint64_t rep_seed =
          derive_seed(seed, {static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(rep)});
      BisectionResult bisection =
          bisect_population(runner, problem, rep_seed, options);
      if (!bisection.solved) {
        size_solved = false;
        out.rows.push_back(SweepRow{runner.name, problem.name, n, rep, 0, 0, 0,
                                    false});
        continue;
      }
      for (std::size_t run = 0; run < bisection.validation_results.size(); ++run) {
        const RunResult& r = bisection.validation_results[run];
        out.rows.push_back(SweepRow{runner.name, problem.name, n, rep,
                                    bisection.n_min, static_cast<int>(run),
                                    r.evaluations, r.success});
        evaluation_sum += static_cast<double>(r.evaluations);
        ++success_count;
      }
    }
    if (size_solved && success_count > 0) {
      out.mean_evaluations.emplace_back(
          n, evaluation_sum / static_cast<double>(success_count));
    } else {
      out.all_solved = false;
    }
  }
  if (out.all_solved && out.mean_evaluations.size() >= 3) {
    std::vector<std::pair<double, double>> points;
    points.reserve(out.mean_evaluations.size());
    for (const auto& [n, mean] : out.mean_evaluations) {
      points.emplace_back(static_cast<double>(n), mean);
    }
    const PowerFit fit = fit_exponent(points);
    out.exponent = fit.slope;
    out.intercept = fit.intercept;
  }
  return out;
}

PowerFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("fit_exponent: need at least 3 points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("fit_exponent: points must be positive");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = static_cast<double>(points.size());
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("fit_exponent: points must span distinct x");
  }
  PowerFit fit;
  fit.slope = (count * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / count;
  return fit;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "algorithm,problem,n,rep,N_min,run_index,evaluations,success\n";
  for (const SweepRow& row : rows) {
    out << row.algorithm << ',' << row.problem << ',' << row.n << ',' << row.rep
        << ',' << row.n_min << ',' << row.run_index << ',' << row.evaluations
        << ',' << (row.success ? 1 : 0) << '\n';
  }
}

}  // namespace eda
