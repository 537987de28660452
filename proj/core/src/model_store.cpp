#include "eda/model_store.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eda {
namespace {

std::vector<int> sorted_union(std::vector<int> vars, int extra) {
  vars.insert(std::upper_bound(vars.begin(), vars.end(), extra), extra);
  return vars;
}

// Extends `base` with variable k under the independence assumption:
// p(base vars, X_k) = p(X_k) * p(base vars). Both factors are normalized, so
// the product table is normalized by construction.
MarginalTable product_extend(const MarginalTable& base, const MarginalTable& uni_k, int k) {
  const std::vector<int> vars = sorted_union(base.vars(), k);
  const std::size_t width = vars.size();
  std::vector<double> probs(std::size_t{1} << width);
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    std::size_t base_idx = 0;
    std::size_t k_bit = 0;
    for (std::size_t pos = 0; pos < width; ++pos) {
      const std::size_t bit = (idx >> (width - 1 - pos)) & 1;
      if (vars[pos] == k) {
        k_bit = bit;
      } else {
        base_idx = (base_idx << 1) | bit;
      }
    }
    probs[idx] = uni_k.probs()[k_bit] * base.probs()[base_idx];
  }
  return MarginalTable(vars, std::move(probs));
}

}  // namespace

ModelStore::ModelStore(int n, double virtual_population)
    : ModelStore(n, virtual_population, nullptr) {}

ModelStore ModelStore::from_dataset(const Dataset& data, double virtual_population) {
  if (data.size() < 1) throw std::invalid_argument("ModelStore::from_dataset: empty dataset");
  return ModelStore(data.variable_count(), virtual_population, &data);
}

ModelStore::ModelStore(int n, double virtual_population, const Dataset* data)
    : n_(n), virtual_n_(virtual_population), structure_(n) {
  if (n < 1) throw std::invalid_argument("ModelStore: n must be positive");
  if (virtual_population < 2.0) {
    throw std::invalid_argument("ModelStore: virtual population must be >= 2");
  }
  univariate_.reserve(static_cast<std::size_t>(n));
  current_.reserve(static_cast<std::size_t>(n));
  candidate_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    univariate_.push_back(std::make_unique<MarginalTable>(make_table({i}, data)));
    current_.push_back(std::make_unique<MarginalTable>(make_table({i}, data)));
    candidate_[i].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      candidate_[i][j] = std::make_unique<MarginalTable>(
          make_table(j < i ? std::vector<int>{j, i} : std::vector<int>{i, j}, data));
    }
  }
}

MarginalTable ModelStore::make_table(std::vector<int> vars, const Dataset* data) const {
  return data ? MarginalTable::empirical(*data, std::move(vars))
              : MarginalTable::uniform(std::move(vars));
}

const MarginalTable* ModelStore::candidate_table(int parent, int target) const {
  if (parent < 0 || parent >= n_ || target < 0 || target >= n_ || parent == target) {
    return nullptr;
  }
  return candidate_[target][parent].get();
}

std::vector<std::pair<int, int>> ModelStore::candidate_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int parent = 0; parent < n_; ++parent) {
    for (int target = 0; target < n_; ++target) {
      if (parent != target && candidate_[target][parent]) {
        edges.emplace_back(parent, target);
      }
    }
  }
  return edges;
}

std::size_t ModelStore::table_count() const {
  std::size_t count = univariate_.size() + current_.size();
  for (const auto& row : candidate_) {
    for (const auto& table : row) count += table != nullptr;
  }
  return count;
}

ModelStore::UpdateStats ModelStore::apply_tournament(const TournamentResult& result) {
  if (static_cast<int>(result.winner.size()) != n_ ||
      static_cast<int>(result.loser.size()) != n_) {
    throw std::invalid_argument("apply_tournament: genotype length mismatch");
  }
  UpdateStats stats;
  auto apply = [&](MarginalTable& table) {
    switch (table.apply_tournament(result, virtual_n_)) {
      case TableUpdate::kApplied:
        ++stats.applied;
        break;
      case TableUpdate::kSkippedClamp:
        ++stats.clamp_skipped;
        break;
      case TableUpdate::kNoChange:
        break;
    }
  };
  for (auto& table : univariate_) apply(*table);
  for (auto& table : current_) apply(*table);
  for (auto& row : candidate_) {
    for (auto& table : row) {
      if (table) apply(*table);
    }
  }
  return stats;
}

double ModelStore::edge_gain(int parent, int target) const {
  const MarginalTable* candidate = candidate_table(parent, target);
  if (!candidate) {
    throw std::invalid_argument("edge_gain: no candidate table for this edge");
  }
  const double h_now = current_[target]->conditional_entropy(target);
  const double h_with = candidate->conditional_entropy(target);
  const double parent_count = static_cast<double>(structure_.parents(target).size());
  const double penalty = std::exp2(parent_count) * std::log2(virtual_n_) / 2.0;
  return virtual_n_ * (h_now - h_with) - penalty;
}

void ModelStore::add_edge(int parent, int target) {
  auto& slot = candidate_[target][parent];
  if (!slot) throw std::invalid_argument("add_edge: no candidate table for this edge");
  if (structure_.would_create_cycle(parent, target)) {
    throw std::invalid_argument("add_edge: would create a cycle");
  }
  structure_.add_edge(parent, target);
  current_[target] = std::move(slot);
  rebuild_candidates_for(target);
  drop_cyclic_candidates();
}

void ModelStore::rebuild_candidates_for(int target) {
  const auto& parents = structure_.parents(target);
  for (int k = 0; k < n_; ++k) {
    candidate_[target][k].reset();
    if (k == target) continue;
    if (std::binary_search(parents.begin(), parents.end(), k)) continue;
    if (structure_.would_create_cycle(k, target)) continue;
    candidate_[target][k] = std::make_unique<MarginalTable>(
        product_extend(*current_[target], *univariate_[k], k));
  }
}

void ModelStore::drop_cyclic_candidates() {
  for (int target = 0; target < n_; ++target) {
    for (int parent = 0; parent < n_; ++parent) {
      if (parent == target || !candidate_[target][parent]) continue;
      if (structure_.has_edge(parent, target) ||
          structure_.would_create_cycle(parent, target)) {
        candidate_[target][parent].reset();
      }
    }
  }
}

int ModelStore::structural_update() {
  int added = 0;
  while (true) {
    int best_parent = -1, best_target = -1;
    double best_gain = 0.0;
    for (int parent = 0; parent < n_; ++parent) {
      for (int target = 0; target < n_; ++target) {
        if (parent == target || !candidate_[target][parent]) continue;
        const double gain = edge_gain(parent, target);
        if (gain > best_gain) {
          best_gain = gain;
          best_parent = parent;
          best_target = target;
        }
        // Ties keep the first candidate in (parent, target) scan order.
      }
    }
    if (best_parent < 0) break;
    add_edge(best_parent, best_target);
    ++added;
  }
  return added;
}

ConditionalModel ModelStore::conditionals() const {
  std::vector<std::vector<double>> cpts(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const auto& parents = structure_.parents(i);
    const MarginalTable& table = *current_[i];
    const auto& vars = table.vars();
    const std::size_t k = parents.size();
    cpts[i].resize(std::size_t{1} << k);
    for (std::size_t pi = 0; pi < cpts[i].size(); ++pi) {
      // Map (x_i, parent instance) onto the joint table's index; both the
      // parent list and the table variables are sorted ascending.
      std::size_t idx0 = 0, idx1 = 0;
      std::size_t parent_pos = 0;
      for (std::size_t pos = 0; pos < vars.size(); ++pos) {
        std::size_t bit0, bit1;
        if (vars[pos] == i) {
          bit0 = 0;
          bit1 = 1;
        } else {
          const std::size_t bit = (pi >> (k - 1 - parent_pos)) & 1;
          ++parent_pos;
          bit0 = bit1 = bit;
        }
        idx0 = (idx0 << 1) | bit0;
        idx1 = (idx1 << 1) | bit1;
      }
      const double mass0 = table.probs()[idx0];
      const double mass1 = table.probs()[idx1];
      const double total = mass0 + mass1;
      cpts[i][pi] = total > 0.0 ? mass1 / total : 0.5;
    }
  }
  return ConditionalModel(structure_, std::move(cpts));
}

void ModelStore::for_each_table(
    const std::function<void(const MarginalTable&)>& fn) const {
  for (const auto& table : univariate_) fn(*table);
  for (const auto& table : current_) fn(*table);
  for (const auto& row : candidate_) {
    for (const auto& table : row) {
      if (table) fn(*table);
    }
  }
}

std::string ModelStore::dump() const {
  std::string out = dump_model(conditionals());
  out += "tables\n";
  char buf[32];
  for_each_table([&](const MarginalTable& table) {
    out += "vars:";
    for (int v : table.vars()) out += " " + std::to_string(v);
    out += "\nprobs:";
    for (double p : table.probs()) {
      std::snprintf(buf, sizeof buf, "%.17g", p);
      out += " ";
      out += buf;
    }
    out += "\n";
  });
  return out;
}

}  // namespace eda
