#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tolsys::sweep {

enum class Family { band, circulant, circle };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Parameter grid from `key=values;key=values`, where values are a comma
/// list of items and an item is a number or an inclusive range `a..b`.
/// Keys per family:
///   band       p, N      (rows with N >= p are skipped)
///   circulant  m, N      (rows with N > m / 2 are skipped)
///   circle     p, eps    (eps kept as exact decimals)
/// A descending range such as `4..3` is empty. Throws InputError on
/// unknown keys or unparsable values.
struct Grid {
  Family family;
  std::map<std::string, std::vector<std::string>> values;
};
Grid parse_grid(Family family, std::string_view params);

struct Row {
  std::size_t size = 0;  // p or m
  std::size_t band = 0;  // N (point band for the circle)
  std::string eps;       // circle only
  /// Quoted closed form: band ceil(p/N), circulant ceil(floor(m/2)/N),
  /// circle ceil(delta/eps).
  std::size_t predicted = 0;
  /// Diameter closed form: band ceil((p-1)/N), circulant and circle
  /// ceil(floor(m/2)/N).
  std::size_t formula = 0;
  std::size_t propagation = 0;
  std::size_t bfs_diameter = 0;
  std::size_t algebra_degree = 0;
  /// formula, propagation, BFS diameter and algebra degree all equal.
  bool oracle_agrees = false;
  bool predicted_differs = false;
};

/// Rows in grid order (outer key first); evaluated in parallel.
std::vector<Row> evaluate(const Grid &grid);

std::string csv_header(Family family);
std::string to_csv(Family family, const std::vector<Row> &rows);

} // namespace tolsys::sweep
