#include "tolsys/generators.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace tolsys {

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

Relation relation_from_mask(std::size_t n, std::uint64_t mask) {
  if (pair_count(n) > 64) {
    throw std::invalid_argument("relation_from_mask: n too large for a 64-bit mask");
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Relation::from_edges(n, edges);
}

Relation random_relation(std::size_t n, double density, Rng &rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Relation::from_edges(n, edges);
}

Relation random_connected_relation(std::size_t n, double extra_density,
                                   Rng &rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(uniform_size(0, v - 1, rng), v);
  }
  std::bernoulli_distribution coin(extra_density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Relation::from_edges(n, edges);
}

std::size_t uniform_size(std::size_t lo, std::size_t hi, Rng &rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace tolsys
