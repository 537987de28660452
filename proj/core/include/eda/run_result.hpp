#pragma once

#include <cstdint>

#include "eda/bayesnet.hpp"

namespace eda {

// Outcome of one optimization run, shared by all drivers. For incremental
// algorithms generations_used is iterations / N; for population algorithms
// it is the number of generations executed. Algorithms without a learned
// structure report an edgeless network.
struct RunResult {
  bool success = false;
  std::uint64_t evaluations = 0;
  double generations_used = 0.0;
  double best_fitness = 0.0;
  NetworkStructure final_structure{1};
};

}  // namespace eda
