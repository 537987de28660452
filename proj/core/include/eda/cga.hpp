#pragma once

#include <cstdint>
#include <vector>

#include "eda/problems.hpp"
#include "eda/run_result.hpp"

namespace eda {

// Compact-GA update: per position, +1/N when the winner has a 1 and the
// loser a 0, -1/N in the opposite case, unchanged otherwise. Clamped to [0,1].
void cga_update(std::vector<double>& probability_vector, const Genotype& winner,
                const Genotype& loser, double virtual_n);

struct CgaConfig {
  int n = 0;
  std::uint64_t virtual_population = 0;  // N
  std::uint64_t max_iterations = 0;      // 0 means n * N
  std::uint64_t seed = 0;
};

// Two samples per iteration, a tournament of two, then cga_update.
RunResult run_cga(const CgaConfig& config, const Problem& problem);

}  // namespace eda
