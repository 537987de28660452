#include "eda/iboa.hpp"

#include <stdexcept>

namespace eda {

Tournament run_tournament(const ConditionalModel& model, const Problem& problem,
                          int k, Rng& rng) {
  if (k < 2) throw std::invalid_argument("run_tournament: k must be >= 2");
  Tournament t;
  Genotype best, worst;
  double best_fitness = 0.0, worst_fitness = 0.0;
  for (int i = 0; i < k; ++i) {
    Genotype g = model.sample(rng);
    const double fitness = evaluate(problem, g);
    if (i == 0) {
      best = g;
      worst = g;
      best_fitness = worst_fitness = fitness;
    } else {
      if (fitness > best_fitness) {
        best = g;
        best_fitness = fitness;
      }
      if (fitness <= worst_fitness) {
        worst = std::move(g);
        worst_fitness = fitness;
      }
    }
  }
  t.result = TournamentResult{std::move(best), std::move(worst)};
  t.winner_fitness = best_fitness;
  t.loser_fitness = worst_fitness;
  t.evaluations = k;
  return t;
}

RunResult run_iboa(const IboaConfig& config, const Problem& problem) {
  if (config.n != problem.n) throw std::invalid_argument("run_iboa: n mismatch");
  if (config.virtual_population < 2) {
    throw std::invalid_argument("run_iboa: virtual population must be >= 2");
  }
  if (config.tournament_size < 2) {
    throw std::invalid_argument("run_iboa: tournament size must be >= 2");
  }
  const std::uint64_t n_virtual = config.virtual_population;
  const std::uint64_t generation_cap =
      config.max_generations > 0 ? config.max_generations
                                 : static_cast<std::uint64_t>(config.n);
  const std::uint64_t iteration_cap = generation_cap * n_virtual;

  Rng rng(config.seed);
  ModelStore store(config.n, static_cast<double>(n_virtual));
  ConditionalModel model = store.conditionals();

  RunResult out;
  out.final_structure = NetworkStructure(config.n);
  bool found = false;
  std::uint64_t iteration = 0;
  while (iteration < iteration_cap && !found) {
    ++iteration;
    Tournament t = run_tournament(model, problem, config.tournament_size, rng);
    out.evaluations += t.evaluations;
    if (iteration == 1 || t.winner_fitness > out.best_fitness) {
      out.best_fitness = t.winner_fitness;
    }
    found = t.winner_fitness == problem.optimum_fitness;

    store.apply_tournament(t.result);
    const bool structure_due = config.strategy == UpdateStrategy::kContinuous ||
                               iteration % n_virtual == 0;
    if (structure_due) store.structural_update();
    if (config.strategy == UpdateStrategy::kFullyPeriodic) {
      if (structure_due) model = store.conditionals();
    } else {
      model = store.conditionals();
    }
    if (config.on_iteration) {
      config.on_iteration(IboaIterationInfo{iteration, out.best_fitness,
                                            store.structure().edge_count()});
    }
  }
  out.success = found;
  out.generations_used =
      static_cast<double>(iteration) / static_cast<double>(n_virtual);
  out.final_structure = store.structure();
  return out;
}

}  // namespace eda
