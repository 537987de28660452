#pragma once

#include <string>

#include "eda/genotype.hpp"

namespace eda {

enum class ProblemKind { kTrap4, kTrap5, kOneMax, kPairMatch };

// A separable test function over binary genotypes with a known optimum.
// Fitness is the sum of block contributions over contiguous, non-overlapping
// blocks of `block_size` bits.
struct Problem {
  ProblemKind kind;
  std::string name;
  int n;
  int block_size;
  double optimum_fitness;
};

// Contribution of one 4-bit block given the number of ones u.
double trap4_unit(int u);

// Contribution of one 5-bit block given the number of ones u.
double trap5_unit(int u);

// Contribution of one block for any problem kind.
double block_unit(ProblemKind kind, int ones);

// Known problems: "trap4", "trap5", "onemax", and "pairmatch" (a pairwise
// sanity problem rewarding equal adjacent bit pairs; not part of the trap
// benchmark family). Throws std::invalid_argument on unknown names or when
// n is not a multiple of the block size.
Problem make_problem(const std::string& name, int n);

double evaluate(const Problem& problem, const Genotype& g);

bool is_optimum(const Problem& problem, const Genotype& g);

}  // namespace eda
