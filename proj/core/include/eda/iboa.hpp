#pragma once

#include <cstdint>
#include <functional>

#include "eda/model_store.hpp"
#include "eda/problems.hpp"
#include "eda/run_result.hpp"

namespace eda {

// How parameter and structure refreshes interleave:
//   kContinuous        - structure updated after every tournament.
//   kPeriodicStructure - structure updated once every N iterations; sampling
//                        conditionals refreshed every iteration (default).
//   kFullyPeriodic     - structure AND sampling conditionals refreshed only
//                        every N iterations; the sampling distribution stays
//                        constant in between.
enum class UpdateStrategy { kContinuous, kPeriodicStructure, kFullyPeriodic };

struct IboaIterationInfo {
  std::uint64_t iteration;
  double best_fitness;
  int edges;
};

struct IboaConfig {
  int n = 0;
  std::uint64_t virtual_population = 0;  // N; also the structure-update period
  int tournament_size = 4;
  UpdateStrategy strategy = UpdateStrategy::kPeriodicStructure;
  std::uint64_t max_generations = 0;  // 0 means n; iteration cap is max_generations * N
  std::uint64_t seed = 0;
  std::function<void(const IboaIterationInfo&)> on_iteration;
};

struct Tournament {
  TournamentResult result;
  double winner_fitness = 0.0;
  double loser_fitness = 0.0;
  int evaluations = 0;
};

// Samples k solutions from the model, evaluates them, and returns the best
// and worst. Ties: the first-sampled wins, the last-sampled loses.
Tournament run_tournament(const ConditionalModel& model, const Problem& problem,
                          int k, Rng& rng);

RunResult run_iboa(const IboaConfig& config, const Problem& problem);

}  // namespace eda
