#include "eda/dtree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eda {

PairCountArray::PairCountArray(int n, double initial_count) : n_(n) {
  if (n < 1) throw std::invalid_argument("PairCountArray: n must be positive");
  if (!(initial_count > 0.0)) {
    throw std::invalid_argument("PairCountArray: initial count must be positive");
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  cells_.assign(4 * pairs, initial_count);
}

std::size_t PairCountArray::pair_offset(int lo, int hi) const {
  // Index of pair (lo, hi), lo < hi, in lexicographic order.
  const std::size_t row_start =
      static_cast<std::size_t>(lo) * (2 * n_ - lo - 1) / 2;
  return 4 * (row_start + static_cast<std::size_t>(hi - lo - 1));
}

double PairCountArray::count(int i, int a, int j, int b) const {
  if (i == j) throw std::invalid_argument("PairCountArray: i == j");
  if (i < j) return cells_[pair_offset(i, j) + ((a << 1) | b)];
  return cells_[pair_offset(j, i) + ((b << 1) | a)];
}

std::array<double, 4> PairCountArray::pairwise_probs(int i, int j) const {
  std::array<double, 4> raw{count(i, 0, j, 0), count(i, 0, j, 1),
                            count(i, 1, j, 0), count(i, 1, j, 1)};
  const double total = raw[0] + raw[1] + raw[2] + raw[3];
  for (double& c : raw) c /= total;
  return raw;
}

double PairCountArray::univariate(int i, int value) const {
  const int partner = i == 0 ? 1 : 0;
  if (n_ == 1) return 0.5;  // single variable: no pair to marginalize
  const auto joint = pairwise_probs(i, partner);
  return joint[(value << 1) | 0] + joint[(value << 1) | 1];
}

void PairCountArray::decay_and_record(const Genotype& solution, double alpha) {
  if (static_cast<int>(solution.size()) != n_) {
    throw std::invalid_argument("decay_and_record: genotype length mismatch");
  }
  for (double& c : cells_) c *= alpha;
  for (int lo = 0; lo < n_ - 1; ++lo) {
    for (int hi = lo + 1; hi < n_; ++hi) {
      cells_[pair_offset(lo, hi) + ((solution[lo] << 1) | solution[hi])] += 1.0;
    }
  }
}

double mutual_information(const std::array<double, 4>& joint) {
  const double pi0 = joint[0] + joint[1];
  const double pi1 = joint[2] + joint[3];
  const double pj0 = joint[0] + joint[2];
  const double pj1 = joint[1] + joint[3];
  const std::array<double, 4> product{pi0 * pj0, pi0 * pj1, pi1 * pj0, pi1 * pj1};
  double mi = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (joint[k] > 0.0) mi += joint[k] * std::log2(joint[k] / product[k]);
  }
  return mi;
}

DependencyTree build_tree(const PairCountArray& counts) {
  const int n = counts.variable_count();
  DependencyTree tree;
  tree.root = 0;
  tree.parent.assign(static_cast<std::size_t>(n), -1);
  tree.order.reserve(static_cast<std::size_t>(n));
  tree.order.push_back(0);
  if (n == 1) return tree;

  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  in_tree[0] = 1;
  // best_weight[v]: strongest connection from the tree to v seen so far.
  std::vector<double> best_weight(static_cast<std::size_t>(n), 0.0);
  std::vector<int> best_from(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    best_weight[v] = mutual_information(counts.pairwise_probs(0, v));
  }
  for (int added = 1; added < n; ++added) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick < 0 || best_weight[v] > best_weight[pick] ||
          (best_weight[v] == best_weight[pick] &&
           (best_from[v] < best_from[pick] ||
            (best_from[v] == best_from[pick] && v < pick)))) {
        pick = v;
      }
    }
    in_tree[pick] = 1;
    tree.parent[pick] = best_from[pick];
    tree.order.push_back(pick);
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double w = mutual_information(counts.pairwise_probs(pick, v));
      if (w > best_weight[v] ||
          (w == best_weight[v] && pick < best_from[v])) {
        best_weight[v] = w;
        best_from[v] = pick;
      }
    }
  }
  return tree;
}

Genotype sample_tree(const DependencyTree& tree, const PairCountArray& counts,
                     Rng& rng) {
  const int n = counts.variable_count();
  Genotype g(static_cast<std::size_t>(n), 0);
  for (int v : tree.order) {
    double p_one;
    if (v == tree.root) {
      p_one = counts.univariate(v, 1);
    } else {
      const int parent = tree.parent[v];
      const auto joint = counts.pairwise_probs(v, parent);
      const int parent_bit = g[parent];
      const double p1 = joint[(1 << 1) | parent_bit];
      const double p0 = joint[(0 << 1) | parent_bit];
      const double total = p0 + p1;
      p_one = total > 0.0 ? p1 / total : 0.5;
    }
    g[v] = rng.bernoulli(p_one) ? 1 : 0;
  }
  return g;
}

void dt_update(PairCountArray& counts, std::span<const Genotype> selected,
               double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("dt_update: alpha must be in (0,1)");
  }
  for (const Genotype& solution : selected) {
    counts.decay_and_record(solution, alpha);
  }
}

RunResult run_dtree_eda(const DtreeConfig& config, const Problem& problem) {
  if (config.n != problem.n) throw std::invalid_argument("run_dtree_eda: n mismatch");
  if (config.samples_per_iteration < 2 || config.selection_count < 1 ||
      config.selection_count >= config.samples_per_iteration) {
    throw std::invalid_argument("run_dtree_eda: need selection_count < samples_per_iteration");
  }
  const std::uint64_t generation_cap =
      config.max_generations > 0 ? config.max_generations
                                 : static_cast<std::uint64_t>(config.n);

  Rng rng(config.seed);
  PairCountArray counts(config.n, config.initial_count);
  const std::size_t samples = static_cast<std::size_t>(config.samples_per_iteration);
  std::vector<Genotype> generated(samples);
  std::vector<double> fitness(samples);
  std::vector<std::size_t> order(samples);

  RunResult out;
  out.final_structure = NetworkStructure(config.n);
  DependencyTree tree;
  bool found = false;
  std::uint64_t generation = 0;
  while (generation < generation_cap && !found) {
    ++generation;
    tree = build_tree(counts);
    for (std::size_t s = 0; s < samples; ++s) {
      generated[s] = sample_tree(tree, counts, rng);
      fitness[s] = evaluate(problem, generated[s]);
      ++out.evaluations;
      if (out.evaluations == 1 || fitness[s] > out.best_fitness) {
        out.best_fitness = fitness[s];
      }
      found = found || fitness[s] == problem.optimum_fitness;
    }
    if (found) break;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fitness[a] > fitness[b];
    });
    std::vector<Genotype> selected;
    selected.reserve(static_cast<std::size_t>(config.selection_count));
    for (int s = 0; s < config.selection_count; ++s) {
      selected.push_back(generated[order[s]]);
    }
    dt_update(counts, selected, config.alpha);
  }
  out.success = found;
  out.generations_used = static_cast<double>(generation);
  // Report the last sampling tree as a parent structure.
  NetworkStructure structure(config.n);
  for (int v = 0; v < config.n; ++v) {
    if (v != tree.root && !tree.parent.empty() && tree.parent[v] >= 0) {
      structure.add_edge(tree.parent[v], v);
    }
  }
  out.final_structure = std::move(structure);
  return out;
}

}  // namespace eda
