#include "eda/problems.hpp"

#include <stdexcept>

namespace eda {

double trap4_unit(int u) {
  if (u < 0 || u > 4) throw std::invalid_argument("trap4_unit: u out of [0,4]");
  return u == 4 ? 4.0 : 3.0 - u;
}

double trap5_unit(int u) {
  if (u < 0 || u > 5) throw std::invalid_argument("trap5_unit: u out of [0,5]");
  return u == 5 ? 5.0 : 4.0 - u;
}

double block_unit(ProblemKind kind, int ones) {
  switch (kind) {
    case ProblemKind::kTrap4:
      return trap4_unit(ones);
    case ProblemKind::kTrap5:
      return trap5_unit(ones);
    case ProblemKind::kOneMax:
      return ones;
    case ProblemKind::kPairMatch:
      // Rewards agreeing pairs; both 00 and 11 are optimal for a block.
      return ones == 1 ? 0.0 : 1.0;
  }
  throw std::logic_error("block_unit: unknown problem kind");
}

Problem make_problem(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("make_problem: n must be positive");
  ProblemKind kind;
  int block = 1;
  if (name == "trap4") {
    kind = ProblemKind::kTrap4;
    block = 4;
  } else if (name == "trap5") {
    kind = ProblemKind::kTrap5;
    block = 5;
  } else if (name == "onemax") {
    kind = ProblemKind::kOneMax;
    block = 1;
  } else if (name == "pairmatch") {
    kind = ProblemKind::kPairMatch;
    block = 2;
  } else {
    throw std::invalid_argument("make_problem: unknown problem \"" + name + "\"");
  }
  if (n % block != 0) {
    throw std::invalid_argument("make_problem: n must be a multiple of " +
                                std::to_string(block) + " for " + name);
  }
  const int blocks = n / block;
  const double optimum = blocks * block_unit(kind, block);
  return Problem{kind, name, n, block, optimum};
}

double evaluate(const Problem& problem, const Genotype& g) {
  if (static_cast<int>(g.size()) != problem.n) {
    throw std::invalid_argument("evaluate: genotype length mismatch");
  }
  double fitness = 0.0;
  for (int start = 0; start < problem.n; start += problem.block_size) {
    int ones = 0;
    for (int j = 0; j < problem.block_size; ++j) ones += g[start + j];
    fitness += block_unit(problem.kind, ones);
  }
  return fitness;
}

bool is_optimum(const Problem& problem, const Genotype& g) {
  return evaluate(problem, g) == problem.optimum_fitness;
}

}  // namespace eda
