#include "tolsys/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tolsys {

Propagation propagation_number(const Relation &r) {
  Propagation out;
  const auto classes = connected_components(r);
  out.connected = classes.size() == 1;
  if (out.connected) {
    out.value = *diameter(r);
    out.per_component = {out.value};
    return out;
  }
  for (const auto &c : classes) {
    const std::size_t d = *diameter(r.restricted_to(c));
    out.per_component.push_back(d);
    out.value = std::max(out.value, d);
  }
  return out;
}

std::vector<std::size_t> cstar_envelope_blocks(const Relation &r) {
  std::vector<std::size_t> blocks;
  for (const auto &c : transitive_closure(r).classes) {
    blocks.push_back(c.size());
  }
  return blocks;
}

Relation band_relation(std::size_t p, std::size_t band) {
  if (band < 1 || band >= p) {
    throw std::invalid_argument("band_relation: need 1 <= N < p (got p=" +
                                std::to_string(p) +
                                ", N=" + std::to_string(band) + ")");
  }
  return band_pattern(p, band);
}

Relation circulant_band_relation(std::size_t m, std::size_t band) {
  if (band < 1 || band > m / 2) {
    throw std::invalid_argument(
        "circulant_band_relation: need 1 <= N <= m/2 (got m=" +
        std::to_string(m) + ", N=" + std::to_string(band) + ")");
  }
  return circulant_pattern(m, band);
}

std::size_t band_ceil_p_over_n(std::size_t p, std::size_t band) {
  return (p + band - 1) / band;
}

MetricPropagationCheck prop_from_metric_theorem(const FiniteMetric &m,
                                                const Rational &eps) {
  if (eps <= Rational(0, 1)) {
    throw std::invalid_argument("eps must be positive");
  }
  const Relation r = epsilon_relation(m, eps);
  const auto actual = diameter(r);
  if (!actual) {
    throw std::invalid_argument("R_eps is disconnected at eps = " +
                                eps.to_string());
  }
  // ceil(delta / eps) with the threshold kept exact: delta is taken as the
  // shortest decimal that round-trips the stored double.
  std::int64_t ratio_ceil = 0;
  try {
    ratio_ceil = (Rational::from_double(m.diameter()) / eps).ceil();
  } catch (const std::overflow_error &) {
    ratio_ceil = static_cast<std::int64_t>(
        std::ceil(static_cast<long double>(m.diameter()) / eps.to_double()));
  }
  const auto predicted =
      static_cast<std::size_t>(std::max<std::int64_t>(1, ratio_ceil));
  return {predicted, *actual, predicted == *actual};
}

} // namespace tolsys
