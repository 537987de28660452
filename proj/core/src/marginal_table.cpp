#include "eda/marginal_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eda {
namespace {

constexpr double kSumTolerance = 1e-9;

}  // namespace

MarginalTable::MarginalTable(std::vector<int> vars, std::vector<double> probs)
    : vars_(std::move(vars)), probs_(std::move(probs)) {
  if (vars_.empty()) throw std::invalid_argument("MarginalTable: needs at least one variable");
  std::vector<int> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("MarginalTable: duplicate variable");
  }
  if (probs_.size() != (std::size_t{1} << vars_.size())) {
    throw std::invalid_argument("MarginalTable: need 2^k entries");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("MarginalTable: entry outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("MarginalTable: entries must sum to 1");
  }
}

MarginalTable MarginalTable::uniform(std::vector<int> vars) {
  const std::size_t m = std::size_t{1} << vars.size();
  return MarginalTable(std::move(vars), std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

MarginalTable MarginalTable::empirical(const Dataset& data, std::vector<int> vars) {
  if (data.size() < 1) throw std::invalid_argument("MarginalTable::empirical: empty dataset");
  MarginalTable table = uniform(std::move(vars));
  std::fill(table.probs_.begin(), table.probs_.end(), 0.0);
  const double weight = 1.0 / data.size();
  for (const Genotype& row : data.rows) {
    table.probs_[table.index_of(row)] += weight;
  }
  return table;
}

double MarginalTable::sum() const {
  double total = 0.0;
  for (double p : probs_) total += p;
  return total;
}

std::size_t MarginalTable::index_of(const Genotype& g) const {
  std::size_t idx = 0;
  for (int v : vars_) idx = (idx << 1) | g[v];
  return idx;
}

TableUpdate MarginalTable::apply_tournament(const TournamentResult& result,
                                            double virtual_n) {
  const std::size_t winner_idx = index_of(result.winner);
  const std::size_t loser_idx = index_of(result.loser);
  if (winner_idx == loser_idx) return TableUpdate::kNoChange;
  const double step = 1.0 / virtual_n;
  if (probs_[winner_idx] + step > 1.0 || probs_[loser_idx] - step < 0.0) {
    return TableUpdate::kSkippedClamp;
  }
  probs_[winner_idx] += step;
  probs_[loser_idx] -= step;
  return TableUpdate::kApplied;
}

double MarginalTable::conditional_entropy(int var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    throw std::invalid_argument("conditional_entropy: variable not in table");
  }
  const std::size_t k = vars_.size();
  const std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
  const std::size_t bit = std::size_t{1} << (k - 1 - pos);
  double h = 0.0;
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    if (idx & bit) continue;  // visit each conditioning instance once
    const double p0 = probs_[idx];
    const double p1 = probs_[idx | bit];
    const double context = p0 + p1;
    if (context <= 0.0) continue;
    if (p0 > 0.0) h -= p0 * std::log2(p0 / context);
    if (p1 > 0.0) h -= p1 * std::log2(p1 / context);
  }
  return h;
}

MarginalTable MarginalTable::marginalize(const std::vector<int>& keep) const {
  std::vector<std::size_t> positions;
  positions.reserve(keep.size());
  for (int v : keep) {
    const auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) {
      throw std::invalid_argument("marginalize: variable not in table");
    }
    positions.push_back(static_cast<std::size_t>(it - vars_.begin()));
  }
  const std::size_t k = vars_.size();
  std::vector<double> out(std::size_t{1} << keep.size(), 0.0);
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    std::size_t target = 0;
    for (std::size_t pos : positions) {
      target = (target << 1) | ((idx >> (k - 1 - pos)) & 1);
    }
    out[target] += probs_[idx];
  }
  // Summation drift can nudge an entry just past 1.
  for (double& p : out) p = std::min(1.0, std::max(0.0, p));
  MarginalTable result = uniform(keep);
  result.probs_ = std::move(out);
  return result;
}

}  // namespace eda
