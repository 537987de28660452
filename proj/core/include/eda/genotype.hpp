#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eda/rng.hpp"

namespace eda {

// Fixed-length binary string; every element is 0 or 1.
using Genotype = std::vector<std::uint8_t>;

inline Genotype parse_bits(std::string_view s) {
  Genotype g;
  g.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("genotype literal must contain only 0/1");
    }
    g.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return g;
}

inline std::string format_bits(const Genotype& g) {
  std::string s;
  s.reserve(g.size());
  for (std::uint8_t b : g) s.push_back(b ? '1' : '0');
  return s;
}

inline Genotype random_genotype(int n, Rng& rng) {
  Genotype g(static_cast<std::size_t>(n));
  for (auto& b : g) b = rng.bernoulli(0.5) ? 1 : 0;
  return g;
}

}  // namespace eda
