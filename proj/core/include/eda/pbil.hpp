#pragma once

#include <cstdint>
#include <vector>

#include "eda/problems.hpp"
#include "eda/run_result.hpp"

namespace eda {

// One PBIL learning step toward a selected solution:
// p_i <- p_i * (1 - rate) + x_i * rate for every position.
void pbil_update(std::vector<double>& probability_vector, const Genotype& selected,
                 double rate);

struct PbilConfig {
  int n = 0;
  int samples_per_iteration = 200;
  int selection_count = 2;
  double learning_rate = 0.005;
  std::uint64_t max_iterations = 0;  // required; no natural default
  std::uint64_t seed = 0;
};

RunResult run_pbil(const PbilConfig& config, const Problem& problem);

}  // namespace eda
