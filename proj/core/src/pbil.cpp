#include "eda/pbil.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eda/rng.hpp"

namespace eda {

void pbil_update(std::vector<double>& probability_vector, const Genotype& selected,
                 double rate) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw std::invalid_argument("pbil_update: rate must be in (0,1)");
  }
  if (probability_vector.size() != selected.size()) {
    throw std::invalid_argument("pbil_update: size mismatch");
  }
  for (std::size_t i = 0; i < probability_vector.size(); ++i) {
    probability_vector[i] =
        probability_vector[i] * (1.0 - rate) + selected[i] * rate;
  }
}

RunResult run_pbil(const PbilConfig& config, const Problem& problem) {
  if (config.n != problem.n) throw std::invalid_argument("run_pbil: n mismatch");
  if (config.samples_per_iteration < 2 ||
      config.selection_count < 1 ||
      config.selection_count >= config.samples_per_iteration) {
    throw std::invalid_argument("run_pbil: need selection_count < samples_per_iteration");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("run_pbil: max_iterations must be set");
  }

  Rng rng(config.seed);
  std::vector<double> pv(static_cast<std::size_t>(config.n), 0.5);
  const std::size_t samples = static_cast<std::size_t>(config.samples_per_iteration);
  std::vector<Genotype> generated(samples);
  std::vector<double> fitness(samples);
  std::vector<std::size_t> order(samples);

  RunResult out;
  out.final_structure = NetworkStructure(config.n);
  bool found = false;
  std::uint64_t iteration = 0;
  while (iteration < config.max_iterations && !found) {
    ++iteration;
    for (std::size_t s = 0; s < samples; ++s) {
      Genotype g(static_cast<std::size_t>(config.n));
      for (int i = 0; i < config.n; ++i) g[i] = rng.bernoulli(pv[i]) ? 1 : 0;
      fitness[s] = evaluate(problem, g);
      generated[s] = std::move(g);
      ++out.evaluations;
      if (out.evaluations == 1 || fitness[s] > out.best_fitness) {
        out.best_fitness = fitness[s];
      }
      found = found || fitness[s] == problem.optimum_fitness;
    }
    if (found) break;
    // Stable order: equal fitness keeps generation order.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fitness[a] > fitness[b];
    });
    for (int s = 0; s < config.selection_count; ++s) {
      pbil_update(pv, generated[order[s]], config.learning_rate);
    }
  }
  out.success = found;
  out.generations_used = static_cast<double>(iteration) /
                         static_cast<double>(config.samples_per_iteration);
  return out;
}

}  // namespace eda
