#include "eda/cga.hpp"

#include <algorithm>
#include <stdexcept>

#include "eda/rng.hpp"

namespace eda {

void cga_update(std::vector<double>& probability_vector, const Genotype& winner,
                const Genotype& loser, double virtual_n) {
  if (virtual_n < 2.0) throw std::invalid_argument("cga_update: N must be >= 2");
  if (probability_vector.size() != winner.size() ||
      winner.size() != loser.size()) {
    throw std::invalid_argument("cga_update: size mismatch");
  }
  const double step = 1.0 / virtual_n;
  for (std::size_t i = 0; i < probability_vector.size(); ++i) {
    if (winner[i] == loser[i]) continue;
    const double moved =
        winner[i] ? probability_vector[i] + step : probability_vector[i] - step;
    probability_vector[i] = std::clamp(moved, 0.0, 1.0);
  }
}

RunResult run_cga(const CgaConfig& config, const Problem& problem) {
  if (config.n != problem.n) throw std::invalid_argument("run_cga: n mismatch");
  if (config.virtual_population < 2) {
    throw std::invalid_argument("run_cga: virtual population must be >= 2");
  }
  const std::uint64_t iteration_cap =
      config.max_iterations > 0
          ? config.max_iterations
          : static_cast<std::uint64_t>(config.n) * config.virtual_population;

  Rng rng(config.seed);
  std::vector<double> pv(static_cast<std::size_t>(config.n), 0.5);
  Genotype a(static_cast<std::size_t>(config.n));
  Genotype b(static_cast<std::size_t>(config.n));

  RunResult out;
  out.final_structure = NetworkStructure(config.n);
  bool found = false;
  std::uint64_t iteration = 0;
  while (iteration < iteration_cap && !found) {
    ++iteration;
    for (int i = 0; i < config.n; ++i) {
      a[i] = rng.bernoulli(pv[i]) ? 1 : 0;
      b[i] = rng.bernoulli(pv[i]) ? 1 : 0;
    }
    const double fa = evaluate(problem, a);
    const double fb = evaluate(problem, b);
    out.evaluations += 2;
    const double better = std::max(fa, fb);
    if (iteration == 1 || better > out.best_fitness) out.best_fitness = better;
    found = better == problem.optimum_fitness;
    // Ties: the first-sampled solution wins.
    const Genotype& winner = fa >= fb ? a : b;
    const Genotype& loser = fa >= fb ? b : a;
    cga_update(pv, winner, loser, static_cast<double>(config.virtual_population));
  }
  out.success = found;
  out.generations_used = static_cast<double>(iteration) /
                         static_cast<double>(config.virtual_population);
  return out;
}

}  // namespace eda
