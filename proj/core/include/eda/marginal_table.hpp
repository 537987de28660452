#pragma once

#include <cstddef>
#include <vector>

#include "eda/bayesnet.hpp"
#include "eda/genotype.hpp"

namespace eda {

// Outcome of a winner/loser tournament. Drives every incremental update.
struct TournamentResult {
  Genotype winner;
  Genotype loser;
};

enum class TableUpdate { kNoChange, kApplied, kSkippedClamp };

// Joint probability table over a small ordered set of variables. Entries are
// indexed by the instance bits in vars order, first variable most
// significant, and sum to 1.
class MarginalTable {
 public:
  MarginalTable(std::vector<int> vars, std::vector<double> probs);

  static MarginalTable uniform(std::vector<int> vars);

  // Empirical joint distribution of `vars` in the dataset.
  static MarginalTable empirical(const Dataset& data, std::vector<int> vars);

  const std::vector<int>& vars() const { return vars_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double sum() const;

  // Entry index selected by a genotype's bits at this table's variables.
  std::size_t index_of(const Genotype& g) const;

  // Winner/loser update: +1/N to the winner-consistent entry, -1/N to the
  // loser-consistent entry. No-op when both point at the same entry; the
  // whole pair is skipped when it would push either entry outside [0,1].
  TableUpdate apply_tournament(const TournamentResult& result, double virtual_n);

  // H(var | all other table variables) in bits.
  double conditional_entropy(int var) const;

  // Project onto a subset of this table's variables (given in table order).
  MarginalTable marginalize(const std::vector<int>& keep) const;

 private:
  std::vector<int> vars_;
  std::vector<double> probs_;
};

}  // namespace eda
