#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eda/bayesnet.hpp"
#include "eda/problems.hpp"
#include "eda/run_result.hpp"

namespace eda {

struct BoaGenerationInfo {
  std::uint64_t generation;
  double best_fitness;
  int edges;
  const std::vector<Genotype>* population;  // freshly sampled population
};

struct BoaConfig {
  int n = 0;
  int population_size = 0;
  int tournament_size = 4;
  std::uint64_t max_generations = 0;  // 0 means n
  std::uint64_t seed = 0;
  std::optional<int> max_parents;
  std::function<void(const BoaGenerationInfo&)> on_generation;
};

// Tournament selection with replacement: `count` draws of `size` uniformly
// chosen individuals, the best of each copied into the result.
std::vector<Genotype> tournament_select(const std::vector<Genotype>& population,
                                        const std::vector<double>& fitness,
                                        int count, int size, Rng& rng);

// Population-based BOA: uniform random initial population, tournament
// selection, greedy BIC network learning, sampling, full replacement.
RunResult run_boa(const BoaConfig& config, const Problem& problem);

}  // namespace eda
