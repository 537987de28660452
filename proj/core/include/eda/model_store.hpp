#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eda/bayesnet.hpp"
#include "eda/marginal_table.hpp"

namespace eda {

// Incremental model state: the current network structure, one joint table
// per variable over {X_i} + parents(i) (source of the sampling
// conditionals), one candidate table per admissible edge j -> i over
// {X_i, X_j} + parents(i) (source of edge scores), and the univariate
// marginals of every variable.
//
// Univariate tables are kept for all variables throughout the run, even
// after a variable gains parents, because they supply the independence
// factor p(X_k) whenever an edge addition spawns new candidate tables.
//
// The total number of stored tables never exceeds n univariate + n current
// + n(n-1) candidate tables.
class ModelStore {
 public:
  // Uniform initialization: empty structure, all tables uniform.
  ModelStore(int n, double virtual_population);

  // Tables initialized to the dataset's empirical marginals instead of
  // uniform. This materializes the correspondence between the store and an
  // explicit population whose rows are the dataset.
  static ModelStore from_dataset(const Dataset& data, double virtual_population);

  int variable_count() const { return n_; }
  double virtual_population() const { return virtual_n_; }
  const NetworkStructure& structure() const { return structure_; }

  const MarginalTable& univariate(int i) const { return *univariate_[i]; }
  const MarginalTable& current_table(int i) const { return *current_[i]; }

  // Null when the edge parent -> target is not admissible (already present,
  // self, or cycle-forming).
  const MarginalTable* candidate_table(int parent, int target) const;

  // Admissible (parent, target) pairs in lexicographic order.
  std::vector<std::pair<int, int>> candidate_edges() const;

  std::size_t table_count() const;

  struct UpdateStats {
    int applied = 0;
    int clamp_skipped = 0;
  };

  // Applies the winner/loser update to every stored table.
  UpdateStats apply_tournament(const TournamentResult& result);

  // BIC gain of adding parent -> target, computed from the stored tables:
  // N * [H(X_t | parents) - H(X_t | parents + {p})] minus the penalty growth
  // for doubling the CPT. Throws when the candidate table is missing.
  double edge_gain(int parent, int target) const;

  // Commits the edge: the candidate table becomes the target's current
  // table, the target's remaining candidate tables are rebuilt around the
  // new parent set under an independence assumption
  // (p(new set) = p(X_k) * p(current set)), and candidate tables anywhere in
  // the store that the new edge makes cycle-forming are dropped.
  void add_edge(int parent, int target);

  // Greedy loop: while some admissible edge has positive gain, add the
  // best one (ties to the lexicographically smallest (parent, target)).
  // Returns the number of edges added.
  int structural_update();

  // Sampling conditionals p(X_i=1 | parents) read off the current tables;
  // zero-mass parent instances fall back to 0.5.
  ConditionalModel conditionals() const;

  void for_each_table(const std::function<void(const MarginalTable&)>& fn) const;

  // Model dump plus one "vars:/probs:" section per stored table.
  std::string dump() const;

 private:
  ModelStore(int n, double virtual_population, const Dataset* data);

  MarginalTable make_table(std::vector<int> vars, const Dataset* data) const;
  void rebuild_candidates_for(int target);
  void drop_cyclic_candidates();

  int n_;
  double virtual_n_;
  NetworkStructure structure_;
  std::vector<std::unique_ptr<MarginalTable>> univariate_;
  std::vector<std::unique_ptr<MarginalTable>> current_;
  // candidate_[target][parent]; null when inadmissible.
  std::vector<std::vector<std::unique_ptr<MarginalTable>>> candidate_;
};

}  // namespace eda
