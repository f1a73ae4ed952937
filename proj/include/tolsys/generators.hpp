#pragma once

#include <cstddef>
#include <cstdint>

#include "tolsys/linalg.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

/// Number of unordered pairs i < j on n points.
std::size_t pair_count(std::size_t n);

/// Relation whose off-diagonal pairs are the set bits of `mask`, pairs taken
/// in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
Relation relation_from_mask(std::size_t n, std::uint64_t mask);

/// Each pair i < j present independently with probability `density`.
Relation random_relation(std::size_t n, double density, Rng &rng);

/// A random spanning tree plus independent extra pairs; always connected.
Relation random_connected_relation(std::size_t n, double extra_density,
                                   Rng &rng);

/// Uniform integer in [lo, hi].
std::size_t uniform_size(std::size_t lo, std::size_t hi, Rng &rng);

} // namespace tolsys
