#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace tolsys::par {

/// Worker cap: TOLSYS_THREADS if set and positive, else the OpenMP default.
int max_threads();

/// Runs `fn(i)` for i in [0, count) across OpenMP threads. Each index writes
/// only its own output slot, so results never depend on scheduling.
template <typename Fn>
void for_each_index(std::size_t count, Fn &&fn) {
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_threads())
  for (std::int64_t i = 0; i < total; ++i) {
    fn(static_cast<std::size_t>(i));
  }
}

/// Serial reference for `for_each_index`.
template <typename Fn>
void for_each_index_serial(std::size_t count, Fn &&fn) {
  for (std::size_t i = 0; i < count; ++i) {
    fn(i);
  }
}

/// Maps every index to a result, preserving index order.
template <typename T, typename Fn>
std::vector<T> map_indices(std::size_t count, Fn &&fn) {
  std::vector<T> out(count);
  for_each_index(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

} // namespace tolsys::par
