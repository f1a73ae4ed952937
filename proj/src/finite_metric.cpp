#include "tolsys/finite_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tolsys/error.hpp"

namespace tolsys {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

FiniteMetric::FiniteMetric(std::size_t n, std::vector<double> dist)
    : n_(n), dist_(std::move(dist)) {
  if (n_ == 0) {
    throw InvariantError("metric must have at least one point");
  }
  if (dist_.size() != n_ * n_) {
    throw DimensionError("metric needs n*n entries");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = (*this)(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw InvariantError("distance at " + at(i, j) +
                             " is negative or not finite");
      }
      if (i == j && d != 0.0) {
        throw InvariantError("nonzero diagonal at " + at(i, j));
      }
      if (i != j && d == 0.0) {
        throw InvariantError("zero distance between distinct points at " +
                             at(i, j));
      }
      if (d != (*this)(j, i)) {
        throw InvariantError("asymmetric distance at " + at(i, j));
      }
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      for (std::size_t z = 0; z < n_; ++z) {
        const double via = (*this)(x, y) + (*this)(y, z);
        if ((*this)(x, z) > via * (1.0 + 1e-12)) {
          throw InvariantError("triangle inequality fails: d" + at(x, z) +
                               " > d" + at(x, y) + " + d" + at(y, z));
        }
      }
    }
  }
}

FiniteMetric FiniteMetric::trusted(std::size_t n, std::vector<double> dist) {
  if (dist.size() != n * n) {
    throw DimensionError("metric needs n*n entries");
  }
  FiniteMetric m;
  m.n_ = n;
  m.dist_ = std::move(dist);
  return m;
}

double FiniteMetric::diameter() const {
  return *std::max_element(dist_.begin(), dist_.end());
}

Relation epsilon_relation(const FiniteMetric &m, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  const std::size_t n = m.size();
  BoolMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m(i, j) < eps) {
        adj.set(i, j);
      }
    }
  }
  return Relation(std::move(adj));
}

Relation epsilon_relation(const FiniteMetric &m, const Rational &eps) {
  return epsilon_relation(m, eps.to_double());
}

bool is_eps_connected(const FiniteMetric &m, const Rational &eps,
                      std::span<const std::size_t> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("is_eps_connected: empty subset");
  }
  const Relation local = epsilon_relation(m, eps).restricted_to(subset);
  return transitive_closure(local).classes.size() == 1;
}

} // namespace tolsys
