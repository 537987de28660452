#include "eda/bayesnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace eda {
namespace {

void check_var(int i, int n, const char* what) {
  if (i < 0 || i >= n) throw std::invalid_argument(std::string(what) + ": variable index out of range");
}

// Index of the parent instance within a CPT, lexicographic with the first
// (lowest) parent as the most significant bit.
std::size_t parent_index(const std::vector<int>& parents, const Genotype& g) {
  std::size_t idx = 0;
  for (int p : parents) idx = (idx << 1) | g[p];
  return idx;
}

double log2_safe(double x) { return std::log2(x); }

}  // namespace

NetworkStructure::NetworkStructure(int n) {
  if (n < 1) throw std::invalid_argument("NetworkStructure: n must be positive");
  parents_.resize(static_cast<std::size_t>(n));
}

NetworkStructure::NetworkStructure(std::vector<std::vector<int>> parents)
    : parents_(std::move(parents)) {
  const int n = variable_count();
  if (n < 1) throw std::invalid_argument("NetworkStructure: empty parent list");
  for (int i = 0; i < n; ++i) {
    auto& ps = parents_[i];
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) {
      throw std::invalid_argument("NetworkStructure: duplicate parent");
    }
    for (int p : ps) {
      check_var(p, n, "NetworkStructure");
      if (p == i) throw std::invalid_argument("NetworkStructure: self-parent");
    }
  }
}

int NetworkStructure::edge_count() const {
  int count = 0;
  for (const auto& ps : parents_) count += static_cast<int>(ps.size());
  return count;
}

bool NetworkStructure::has_edge(int parent, int child) const {
  const auto& ps = parents_[child];
  return std::binary_search(ps.begin(), ps.end(), parent);
}

bool NetworkStructure::would_create_cycle(int parent, int child) const {
  if (parent == child) return true;
  // A cycle appears iff `parent` is reachable from `child` along
  // parent -> child edges, i.e. iff child is an ancestor-to-be of itself.
  // Walk child -> descendants via reverse lookup of parent sets.
  const int n = variable_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{child};
  seen[child] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && has_edge(v, u)) {
        if (u == parent) return true;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

void NetworkStructure::add_edge(int parent, int child) {
  const int n = variable_count();
  check_var(parent, n, "add_edge");
  check_var(child, n, "add_edge");
  if (parent == child) throw std::invalid_argument("add_edge: self-parent");
  if (has_edge(parent, child)) throw std::invalid_argument("add_edge: duplicate edge");
  if (would_create_cycle(parent, child)) throw std::invalid_argument("add_edge: would create a cycle");
  auto& ps = parents_[child];
  ps.insert(std::upper_bound(ps.begin(), ps.end(), parent), parent);
}

bool NetworkStructure::is_acyclic() const {
  try {
    ancestral_order();
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

std::vector<int> NetworkStructure::ancestral_order() const {
  const int n = variable_count();
  std::vector<int> remaining_parents(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    remaining_parents[i] = static_cast<int>(parents_[i].size());
    for (int p : parents_[i]) children[p].push_back(i);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i) {
    if (remaining_parents[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    // Pop the smallest index for a deterministic order.
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int c : children[v]) {
      if (--remaining_parents[c] == 0) {
        ready.insert(std::lower_bound(ready.begin(), ready.end(), c,
                                      [](int a, int b) { return a > b; }),
                     c);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::logic_error("ancestral_order: structure contains a cycle");
  }
  return order;
}

int count_instances(const Dataset& data, const std::vector<int>& vars,
                    const std::vector<std::uint8_t>& instance) {
  if (vars.size() != instance.size()) {
    throw std::invalid_argument("count_instances: vars/instance size mismatch");
  }
  int count = 0;
  for (const Genotype& row : data.rows) {
    bool match = true;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (row[vars[k]] != instance[k]) {
        match = false;
        break;
      }
    }
    count += match;
  }
  return count;
}

ConditionalModel::ConditionalModel(NetworkStructure structure,
                                   std::vector<std::vector<double>> p_one)
    : structure_(std::move(structure)), p_one_(std::move(p_one)) {
  const int n = structure_.variable_count();
  if (static_cast<int>(p_one_.size()) != n) {
    throw std::invalid_argument("ConditionalModel: one CPT per variable required");
  }
  for (int i = 0; i < n; ++i) {
    const std::size_t expected = std::size_t{1} << structure_.parents(i).size();
    if (p_one_[i].size() != expected) {
      throw std::invalid_argument("ConditionalModel: CPT size must be 2^|parents|");
    }
    for (double p : p_one_[i]) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("ConditionalModel: probability outside [0,1]");
      }
    }
  }
  order_ = structure_.ancestral_order();
}

double ConditionalModel::p_one_given(int var, const Genotype& partial) const {
  return p_one_[var][parent_index(structure_.parents(var), partial)];
}

Genotype ConditionalModel::sample(Rng& rng) const {
  Genotype g(static_cast<std::size_t>(variable_count()), 0);
  for (int v : order_) {
    g[v] = rng.bernoulli(p_one_given(v, g)) ? 1 : 0;
  }
  return g;
}

ConditionalModel mle_parameters(const Dataset& data,
                                const NetworkStructure& structure) {
  if (data.size() < 1) throw std::invalid_argument("mle_parameters: empty dataset");
  if (data.variable_count() != structure.variable_count()) {
    throw std::invalid_argument("mle_parameters: dataset/structure width mismatch");
  }
  const int n = structure.variable_count();
  std::vector<std::vector<double>> cpts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& parents = structure.parents(i);
    const std::size_t m = std::size_t{1} << parents.size();
    std::vector<int> ones(m, 0), totals(m, 0);
    for (const Genotype& row : data.rows) {
      const std::size_t idx = parent_index(parents, row);
      totals[idx] += 1;
      ones[idx] += row[i];
    }
    cpts[i].resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      cpts[i][k] = totals[k] > 0 ? static_cast<double>(ones[k]) / totals[k] : 0.5;
    }
  }
  return ConditionalModel(structure, std::move(cpts));
}

double conditional_entropy(const Dataset& data, int i,
                           const std::vector<int>& parents) {
  for (int p : parents) {
    if (p == i) throw std::invalid_argument("conditional_entropy: i in parents");
  }
  const int rows = data.size();
  const std::size_t m = std::size_t{1} << parents.size();
  std::vector<int> counts(2 * m, 0);
  for (const Genotype& row : data.rows) {
    const std::size_t idx = parent_index(parents, row);
    counts[2 * idx + row[i]] += 1;
  }
  double h = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const int total = counts[2 * k] + counts[2 * k + 1];
    if (total == 0) continue;
    for (int x = 0; x < 2; ++x) {
      const int c = counts[2 * k + x];
      if (c == 0) continue;
      const double joint = static_cast<double>(c) / rows;
      const double conditional = static_cast<double>(c) / total;
      h -= joint * log2_safe(conditional);
    }
  }
  return h;
}

double bic_term(const Dataset& data, int i, const std::vector<int>& parents) {
  const double n_rows = data.size();
  const double penalty =
      static_cast<double>(std::size_t{1} << parents.size()) * log2_safe(n_rows) / 2.0;
  return -conditional_entropy(data, i, parents) * n_rows - penalty;
}

double bic_score(const Dataset& data, const NetworkStructure& structure) {
  double score = 0.0;
  for (int i = 0; i < structure.variable_count(); ++i) {
    score += bic_term(data, i, structure.parents(i));
  }
  return score;
}

NetworkStructure greedy_learn(const Dataset& data,
                              std::optional<int> max_parents) {
  if (data.size() < 1) throw std::invalid_argument("greedy_learn: empty dataset");
  const int n = data.variable_count();
  NetworkStructure structure(n);
  if (n == 1) return structure;

  std::vector<double> current_term(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current_term[i] = bic_term(data, i, {});

  // gain[child][parent]; refreshed for a child whenever its parent set grows.
  std::vector<std::vector<double>> gain(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  auto refresh_child = [&](int child) {
    const auto& parents = structure.parents(child);
    for (int p = 0; p < n; ++p) {
      if (p == child || structure.has_edge(p, child)) continue;
      std::vector<int> extended = parents;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), p), p);
      gain[child][p] = bic_term(data, child, extended) - current_term[child];
    }
  };
  for (int i = 0; i < n; ++i) refresh_child(i);

  while (true) {
    int best_parent = -1, best_child = -1;
    double best_gain = 0.0;
    for (int parent = 0; parent < n; ++parent) {
      for (int child = 0; child < n; ++child) {
        if (parent == child || structure.has_edge(parent, child)) continue;
        if (max_parents &&
            static_cast<int>(structure.parents(child).size()) >= *max_parents) {
          continue;
        }
        const double g = gain[child][parent];
        if (g <= 0.0) continue;
        if (g > best_gain) {
          best_gain = g;
          best_parent = parent;
          best_child = child;
        }
        // Equal gains fall through: the (parent, child) scan order is
        // lexicographic, so the first candidate seen wins ties.
      }
    }
    if (best_parent < 0) break;
    if (structure.would_create_cycle(best_parent, best_child)) {
      // Mark inadmissible and rescan.
      gain[best_child][best_parent] = 0.0;
      continue;
    }
    structure.add_edge(best_parent, best_child);
    current_term[best_child] =
        bic_term(data, best_child, structure.parents(best_child));
    refresh_child(best_child);
  }
  return structure;
}

std::string dump_model(const ConditionalModel& model) {
  std::string out = "n=" + std::to_string(model.variable_count()) + "\n";
  for (int i = 0; i < model.variable_count(); ++i) {
    out += std::to_string(i) + " <-";
    for (int p : model.structure().parents(i)) out += " " + std::to_string(p);
    out += "\n";
  }
  char buf[32];
  for (int i = 0; i < model.variable_count(); ++i) {
    const auto& cpt = model.table(i);
    for (std::size_t k = 0; k < cpt.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", cpt[k]);
      out += buf;
      out += (k + 1 < cpt.size()) ? ' ' : '\n';
    }
  }
  return out;
}

}  // namespace eda
