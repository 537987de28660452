#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "eda/problems.hpp"
#include "eda/run_result.hpp"
#include "eda/rng.hpp"

namespace eda {

// Decayed joint counts A[X_i=a, X_j=b] for every pair of variables. Storage
// is symmetric: the (i,j) and (j,i) views read the same cells with the
// assignment transposed.
class PairCountArray {
 public:
  PairCountArray(int n, double initial_count);

  int variable_count() const { return n_; }

  double count(int i, int a, int j, int b) const;

  // Normalized joint distribution of the pair, indexed (a << 1) | b for
  // X_i = a, X_j = b.
  std::array<double, 4> pairwise_probs(int i, int j) const;

  // Univariate marginal, obtained from the pairwise table with the
  // lowest-index other variable as the partner.
  double univariate(int i, int value) const;

  // Decay every cell by `alpha`, then add 1 to the cell matching the
  // solution in every pair.
  void decay_and_record(const Genotype& solution, double alpha);

 private:
  std::size_t pair_offset(int lo, int hi) const;

  int n_;
  std::vector<double> cells_;  // 4 per unordered pair, lexicographic (lo, hi)
};

// Mutual information in bits of a normalized 4-entry pairwise distribution.
double mutual_information(const std::array<double, 4>& joint);

// Rooted dependency tree: parent[i] for every non-root, sampling order from
// the root down.
struct DependencyTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1
  std::vector<int> order;   // root first, every node after its parent
};

// Maximum-mutual-information spanning tree (Prim), rooted at variable 0.
// Ties go to the lexicographically smallest (tree node, new node) edge.
DependencyTree build_tree(const PairCountArray& counts);

// Root from its univariate marginal, children from p(X_i | X_parent).
Genotype sample_tree(const DependencyTree& tree, const PairCountArray& counts,
                     Rng& rng);

// Applies decay_and_record for each selected solution in order.
void dt_update(PairCountArray& counts, std::span<const Genotype> selected,
               double alpha);

struct DtreeConfig {
  int n = 0;
  int samples_per_iteration = 0;      // N
  int selection_count = 2;            // N_best
  double alpha = 0.99;
  double initial_count = 1000.0;      // C_init
  std::uint64_t max_generations = 0;  // 0 means n
  std::uint64_t seed = 0;
};

RunResult run_dtree_eda(const DtreeConfig& config, const Problem& problem);

}  // namespace eda
