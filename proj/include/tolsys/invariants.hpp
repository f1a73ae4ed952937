#pragma once

#include <cstddef>
#include <vector>

#include "tolsys/finite_metric.hpp"
#include "tolsys/rational.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

struct Propagation {
  bool connected = false;
  /// diam(R) when connected; otherwise the max over components.
  std::size_t value = 0;
  /// One entry per class of the closure, same order as its classes.
  std::vector<std::size_t> per_component;
};

/// Propagation number of E(R). Disconnected relations are handled through
/// E(R) = direct sum of E(R|C_i): each component contributes its diameter.
Propagation propagation_number(const Relation &r);

/// Sizes of the full matrix blocks of the C*-envelope, one per class of the
/// closure (ordered by smallest member). A connected relation gives {n}.
std::vector<std::size_t> cstar_envelope_blocks(const Relation &r);

/// p x p band pattern {|i - j| <= N}; requires 1 <= N < p.
Relation band_relation(std::size_t p, std::size_t band);
/// m x m circulant band {min(|i - j|, m - |i - j|) <= N}; 1 <= N <= m / 2.
Relation circulant_band_relation(std::size_t m, std::size_t band);

/// ceil(p / N): the closed form quoted for band matrices. Kept next to the
/// diameter value ceil((p - 1) / N) so the two can be compared.
std::size_t band_ceil_p_over_n(std::size_t p, std::size_t band);

struct MetricPropagationCheck {
  std::size_t predicted; // ceil(delta / eps)
  std::size_t actual;    // propagation number of E(R_eps)
  bool agrees;
};

/// Compares ceil(delta / eps) with the propagation number of the d < eps
/// relation. Disagreement is a valid outcome for metrics that are not path
/// metrics at this scale. Throws std::invalid_argument if R_eps is
/// disconnected.
MetricPropagationCheck prop_from_metric_theorem(const FiniteMetric &m,
                                                const Rational &eps);

} // namespace tolsys
