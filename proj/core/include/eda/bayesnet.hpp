#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eda/genotype.hpp"
#include "eda/rng.hpp"

namespace eda {

// Directed acyclic graph over n binary variables, stored as per-variable
// parent sets (sorted ascending). add_edge preserves acyclicity; the
// parent-set constructor only validates ranges and duplicates, so that a
// broken structure can be detected by ancestral_order (which throws).
class NetworkStructure {
 public:
  explicit NetworkStructure(int n);
  explicit NetworkStructure(std::vector<std::vector<int>> parents);

  int variable_count() const { return static_cast<int>(parents_.size()); }
  const std::vector<int>& parents(int i) const { return parents_[i]; }
  int edge_count() const;
  bool has_edge(int parent, int child) const;

  // True if adding parent -> child would close a directed cycle.
  bool would_create_cycle(int parent, int child) const;

  // Throws std::invalid_argument for self/duplicate edges or cycles.
  void add_edge(int parent, int child);

  bool is_acyclic() const;

  // Topological order: every variable appears after all of its parents.
  // Throws std::logic_error when the graph contains a cycle.
  std::vector<int> ancestral_order() const;

  bool operator==(const NetworkStructure&) const = default;

 private:
  std::vector<std::vector<int>> parents_;
};

struct Dataset {
  std::vector<Genotype> rows;

  int variable_count() const {
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  int size() const { return static_cast<int>(rows.size()); }
};

// Number of rows whose bits at `vars` equal `instance`. An empty selection
// matches every row.
int count_instances(const Dataset& data, const std::vector<int>& vars,
                    const std::vector<std::uint8_t>& instance);

// Bayesian network with CPTs: for each variable i, p(X_i = 1 | parents = pi)
// for every parent instance pi, ordered lexicographically over the sorted
// parent list (first parent is the most significant index bit).
class ConditionalModel {
 public:
  ConditionalModel(NetworkStructure structure,
                   std::vector<std::vector<double>> p_one);

  const NetworkStructure& structure() const { return structure_; }
  const std::vector<double>& table(int var) const { return p_one_[var]; }
  int variable_count() const { return structure_.variable_count(); }

  // Probability that variable `var` is 1 given the bits already assigned to
  // its parents in `partial`.
  double p_one_given(int var, const Genotype& partial) const;

  // Probabilistic logic sampling: generate variables in ancestral order,
  // each 1 with its conditional probability given the sampled parents.
  Genotype sample(Rng& rng) const;

 private:
  NetworkStructure structure_;
  std::vector<std::vector<double>> p_one_;
  std::vector<int> order_;
};

// Maximum-likelihood CPTs from data; unseen parent instances fall back to 0.5.
ConditionalModel mle_parameters(const Dataset& data,
                                const NetworkStructure& structure);

// Empirical conditional entropy H(X_i | parents) in bits.
double conditional_entropy(const Dataset& data, int i,
                           const std::vector<int>& parents);

// Per-variable BIC contribution: -H(X_i|parents) * N - 2^|parents| * log2(N)/2.
double bic_term(const Dataset& data, int i, const std::vector<int>& parents);

// Network score; the sum of bic_term over all variables. Higher is better.
double bic_score(const Dataset& data, const NetworkStructure& structure);

// Greedy structure search: start from the empty network and repeatedly add
// the acyclicity-preserving edge with the largest positive BIC gain; ties go
// to the lexicographically smallest (parent, child) pair.
NetworkStructure greedy_learn(const Dataset& data,
                              std::optional<int> max_parents = std::nullopt);

// Text dump: line "n=<n>", one "i <- parents" line per variable, then one
// line per variable listing p(X_i=1|pi) for pi in lexicographic order.
std::string dump_model(const ConditionalModel& model);

}  // namespace eda
