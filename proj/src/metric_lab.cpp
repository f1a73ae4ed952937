#include "tolsys/metric_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "tolsys/error.hpp"
#include "tolsys/invariants.hpp"

namespace tolsys {

namespace {

Rational cell(std::size_t k, std::size_t p) {
  return Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(p));
}

void require_positive(const Rational &eps) {
  if (eps <= Rational(0, 1)) {
    throw std::invalid_argument("eps must be positive, got " + eps.to_string());
  }
}

} // namespace

IntervalPartition::IntervalPartition(std::size_t cells) : p_(cells) {
  if (p_ == 0) {
    throw std::invalid_argument("partition needs at least one cell");
  }
}

Rational IntervalPartition::lower(std::size_t k) const { return cell(k, p_); }
Rational IntervalPartition::upper(std::size_t k) const { return cell(k + 1, p_); }

Rational IntervalPartition::sup_distance(std::size_t k, std::size_t l) const {
  const std::size_t gap = k > l ? k - l : l - k;
  return cell(gap + 1, p_);
}

std::size_t partition_band(std::size_t p, const Rational &eps) {
  // (m + 1) / p <= eps  <=>  m + 1 <= floor(eps * p)
  const std::int64_t cells = (eps * static_cast<std::int64_t>(p)).floor();
  const std::int64_t m = std::max<std::int64_t>(cells - 1, 0);
  return std::min<std::size_t>(static_cast<std::size_t>(m), p - 1);
}

std::size_t point_band(std::size_t p, const Rational &eps) {
  // m / p < eps  <=>  m < eps * p  <=>  m <= ceil(eps * p) - 1
  const std::int64_t m = (eps * static_cast<std::int64_t>(p)).ceil() - 1;
  return static_cast<std::size_t>(std::max<std::int64_t>(m, 0));
}

PartitionRelation partition_relation(std::size_t p, const Rational &eps) {
  if (p == 0) {
    throw std::invalid_argument("partition needs p >= 1");
  }
  if (eps <= cell(1, p)) {
    throw std::invalid_argument("partition_relation: need eps > 1/p (p=" +
                                std::to_string(p) + ", eps=" +
                                eps.to_string() + ")");
  }
  const std::size_t band = partition_band(p, eps);
  return {band_pattern(p, band), band, std::min(point_band(p, eps), p - 1)};
}

FiniteMetric graph_metric(std::size_t n,
                          const std::vector<WeightedEdge> &edges) {
  if (n == 0) {
    throw InputError("graph needs n >= 1");
  }
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto &e = edges[k];
    if (e.a >= n || e.b >= n) {
      throw InputError("edge " + std::to_string(k) + " index out of range");
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw InputError("edge " + std::to_string(k) +
                       " length must be positive and finite");
    }
    if (e.a == e.b) {
      continue;
    }
    adj[e.a].emplace_back(e.b, e.length);
    adj[e.b].emplace_back(e.a, e.length);
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n * n, inf);
  using Item = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    double *row = dist.data() + s * n;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > row[u]) {
        continue;
      }
      for (auto [v, w] : adj[u]) {
        if (d + w < row[v]) {
          row[v] = d + w;
          heap.emplace(row[v], v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (row[t] == inf) {
        throw InputError("graph is disconnected (no path " +
                         std::to_string(s) + " -> " + std::to_string(t) + ")");
      }
    }
  }
  // Dijkstra from each end can round differently; keep the smaller value.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(dist[i * n + j], dist[j * n + i]);
      dist[i * n + j] = dist[j * n + i] = d;
    }
  }
  return FiniteMetric::trusted(n, std::move(dist));
}

FiniteMetric circle_metric(std::size_t p) {
  if (p < 3) {
    throw std::invalid_argument("circle_metric: need p >= 3");
  }
  std::vector<double> dist(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      dist[i * p + j] =
          static_cast<double>(std::min(gap, p - gap)) / static_cast<double>(p);
    }
  }
  return FiniteMetric::trusted(p, std::move(dist));
}

Relation circle_relation(std::size_t p, const Rational &eps) {
  require_positive(eps);
  if (p < 3) {
    throw std::invalid_argument("circle_relation: need p >= 3");
  }
  // gap / p < eps  <=>  gap <= point_band
  return circulant_pattern(p, std::min(point_band(p, eps), p / 2));
}

CompositionLawReport composition_law_check(const FiniteMetric &m,
                                           const Rational &eps1,
                                           const Rational &eps2) {
  require_positive(eps1);
  require_positive(eps2);
  const Relation r1 = epsilon_relation(m, eps1);
  const Relation r2 = epsilon_relation(m, eps2);
  const Relation sum = epsilon_relation(m, eps1 + eps2);
  const Relation composed = symmetrized_compose(r1, r2);
  CompositionLawReport out;
  out.inclusion = composed.adj().subset_of(sum.adj());
  out.holds = composed == sum;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (sum.contains(i, j) && !composed.contains(i, j)) {
        out.missing_pairs.emplace_back(i, j);
      }
    }
  }
  return out;
}

} // namespace tolsys
