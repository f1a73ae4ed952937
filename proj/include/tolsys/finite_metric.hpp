#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tolsys/rational.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

/// Symmetric distance matrix with zero diagonal, positive off-diagonal and
/// the triangle inequality (relative slack 1e-12 for rounded sums).
class FiniteMetric {
public:
  /// Row-major n*n distances. Throws InvariantError naming the offending
  /// entry when an invariant fails.
  FiniteMetric(std::size_t n, std::vector<double> dist);

  /// Skips the O(n^3) triangle scan; for constructions that are metrics by
  /// design (arc distance, shortest paths).
  static FiniteMetric trusted(std::size_t n, std::vector<double> dist);

  std::size_t size() const { return n_; }
  double operator()(std::size_t x, std::size_t y) const {
    return dist_[x * n_ + y];
  }
  /// Largest distance.
  double diameter() const;

private:
  FiniteMetric() = default;

  std::size_t n_ = 0;
  std::vector<double> dist_;
};

/// {(x, y) : d(x, y) < eps}, strict. `eps` is rounded to double once, so
/// a distance that is the correctly rounded value of the same rational
/// as `eps` compares equal and is excluded.
Relation epsilon_relation(const FiniteMetric &m, const Rational &eps);
Relation epsilon_relation(const FiniteMetric &m, double eps);

/// True iff the d < eps relation restricted to `subset` generates a single
/// class. Throws std::invalid_argument on an empty subset.
bool is_eps_connected(const FiniteMetric &m, const Rational &eps,
                      std::span<const std::size_t> subset);

} // namespace tolsys
