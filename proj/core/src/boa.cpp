#include "eda/boa.hpp"

#include <stdexcept>

namespace eda {

std::vector<Genotype> tournament_select(const std::vector<Genotype>& population,
                                        const std::vector<double>& fitness,
                                        int count, int size, Rng& rng) {
  if (population.empty()) throw std::invalid_argument("tournament_select: empty population");
  if (population.size() != fitness.size()) {
    throw std::invalid_argument("tournament_select: population/fitness size mismatch");
  }
  if (size < 1) throw std::invalid_argument("tournament_select: size must be >= 1");
  std::vector<Genotype> selected;
  selected.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    std::size_t best = rng.below(population.size());
    for (int d = 1; d < size; ++d) {
      const std::size_t challenger = rng.below(population.size());
      if (fitness[challenger] > fitness[best]) best = challenger;
    }
    selected.push_back(population[best]);
  }
  return selected;
}

RunResult run_boa(const BoaConfig& config, const Problem& problem) {
  if (config.n != problem.n) throw std::invalid_argument("run_boa: n mismatch");
  if (config.population_size < 2) {
    throw std::invalid_argument("run_boa: population size must be >= 2");
  }
  if (config.tournament_size < 2) {
    throw std::invalid_argument("run_boa: tournament size must be >= 2");
  }
  const std::uint64_t generation_cap =
      config.max_generations > 0 ? config.max_generations
                                 : static_cast<std::uint64_t>(config.n);
  const std::size_t pop_size = static_cast<std::size_t>(config.population_size);

  Rng rng(config.seed);
  std::vector<Genotype> population;
  population.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    population.push_back(random_genotype(config.n, rng));
  }

  RunResult out;
  out.final_structure = NetworkStructure(config.n);
  std::vector<double> fitness(pop_size);
  bool found = false;
  auto evaluate_population = [&]() {
    for (std::size_t i = 0; i < pop_size; ++i) {
      fitness[i] = evaluate(problem, population[i]);
      ++out.evaluations;
      if (out.evaluations == 1 || fitness[i] > out.best_fitness) {
        out.best_fitness = fitness[i];
      }
      found = found || fitness[i] == problem.optimum_fitness;
    }
  };
  evaluate_population();

  std::uint64_t generation = 0;
  while (!found && generation < generation_cap) {
    std::vector<Genotype> selected = tournament_select(
        population, fitness, config.population_size, config.tournament_size, rng);
    const Dataset data{std::move(selected)};
    NetworkStructure structure = greedy_learn(data, config.max_parents);
    const ConditionalModel model = mle_parameters(data, structure);
    for (std::size_t i = 0; i < pop_size; ++i) {
      population[i] = model.sample(rng);  // full replacement
    }
    evaluate_population();
    ++generation;
    out.final_structure = std::move(structure);
    if (config.on_generation) {
      config.on_generation(BoaGenerationInfo{
          generation, out.best_fitness, out.final_structure.edge_count(),
          &population});
    }
  }
  out.success = found;
  out.generations_used = static_cast<double>(generation);
  return out;
}

}  // namespace eda
