#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "tolsys/finite_metric.hpp"
#include "tolsys/rational.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

/// Uniform partition of [0, 1) into cells U_k = [k/p, (k+1)/p).
class IntervalPartition {
public:
  explicit IntervalPartition(std::size_t cells);

  std::size_t cells() const { return p_; }
  Rational lower(std::size_t k) const;
  Rational upper(std::size_t k) const;
  /// sup{|s - t| : s in U_k, t in U_l} = (|k - l| + 1) / p (not attained).
  Rational sup_distance(std::size_t k, std::size_t l) const;

private:
  std::size_t p_;
};

struct PartitionRelation {
  Relation relation;
  /// Cell convention: largest m with (m + 1) / p <= eps, capped at p - 1.
  std::size_t band;
  /// Point convention for comparison: largest m with m / p < eps.
  std::size_t point_band;
};

/// Cells U_k x U_l inside {d < eps} form the band {|k - l| <= band}.
/// Requires eps > 1/p; throws std::invalid_argument otherwise.
PartitionRelation partition_relation(std::size_t p, const Rational &eps);

/// Cell-sup band width for (p, eps).
std::size_t partition_band(std::size_t p, const Rational &eps);
/// Point-distance band width: largest m with m / p < eps.
std::size_t point_band(std::size_t p, const Rational &eps);

struct WeightedEdge {
  std::size_t a;
  std::size_t b;
  double length;
};

/// Shortest-path metric (Dijkstra from every source). Throws InputError for
/// bad indices, non-positive lengths or a disconnected graph.
FiniteMetric graph_metric(std::size_t n, const std::vector<WeightedEdge> &edges);

/// Arc distance min(|i - j|, p - |i - j|) / p on p equally spaced points of
/// the circle of circumference 1. Requires p >= 3.
FiniteMetric circle_metric(std::size_t p);

/// {d < eps} on the discretised circle computed with integer arithmetic.
Relation circle_relation(std::size_t p, const Rational &eps);

struct CompositionLawReport {
  /// R_eps1 * R_eps2 is contained in R_(eps1 + eps2) (always expected).
  bool inclusion;
  /// Equality.
  bool holds;
  /// Pairs (i < j) in R_(eps1 + eps2) with no z such that
  /// d(i, z) < eps1 and d(z, j) < eps2 or the other way round.
  std::vector<Edge> missing_pairs;
};

/// Compares R_eps1 * R_eps2 with R_(eps1 + eps2); eps1 + eps2 is formed
/// exactly before rounding.
CompositionLawReport composition_law_check(const FiniteMetric &m,
                                           const Rational &eps1,
                                           const Rational &eps2);

} // namespace tolsys
