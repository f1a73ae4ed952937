#include "tolsys/sweep.hpp"

#include <charconv>
#include <set>

#include "tolsys/error.hpp"
#include "tolsys/finite_metric.hpp"
#include "tolsys/invariants.hpp"
#include "tolsys/metric_lab.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/parallel.hpp"
#include "tolsys/rational.hpp"

namespace tolsys::sweep {

namespace {

constexpr std::size_t kMaxRangeLength = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? s.size() - start
                                                                    : at - start)));
    if (at == std::string_view::npos) {
      return out;
    }
    start = at + 1;
  }
}

std::size_t parse_count(std::string_view text, const std::string &key) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("--params " + key + ": not a nonnegative integer: '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::size_t> counts(const Grid &grid, const std::string &key) {
  std::vector<std::size_t> out;
  for (const std::string &v : grid.values.at(key)) {
    out.push_back(parse_count(v, key));
  }
  return out;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Row measure(const Relation &r, Row row) {
  row.propagation = propagation_number(r).value;
  row.bfs_diameter = diameter_bfs(r).value_or(0);
  row.algebra_degree = generated_algebra_degree(r).degree;
  row.oracle_agrees = row.formula == row.propagation &&
                      row.propagation == row.bfs_diameter &&
                      row.bfs_diameter == row.algebra_degree;
  row.predicted_differs = row.predicted != row.propagation;
  return row;
}

} // namespace

Family parse_family(std::string_view name) {
  if (name == "band") {
    return Family::band;
  }
  if (name == "circulant") {
    return Family::circulant;
  }
  if (name == "circle") {
    return Family::circle;
  }
  throw InputError("unknown family '" + std::string(name) +
                   "' (expected band, circulant or circle)");
}

std::string_view family_name(Family f) {
  switch (f) {
  case Family::band:
    return "band";
  case Family::circulant:
    return "circulant";
  case Family::circle:
    return "circle";
  }
  return "?";
}

Grid parse_grid(Family family, std::string_view params) {
  const std::set<std::string> keys =
      family == Family::band        ? std::set<std::string>{"p", "N"}
      : family == Family::circulant ? std::set<std::string>{"m", "N"}
                                    : std::set<std::string>{"p", "eps"};
  Grid grid{family, {}};
  for (const std::string &k : keys) {
    grid.values[k];
  }
  if (trim(params).empty()) {
    return grid;
  }
  for (std::string_view part : split(params, ';')) {
    if (part.empty()) {
      continue;
    }
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("--params: expected key=values, got '" + std::string(part) + "'");
    }
    const std::string key(trim(part.substr(0, eq)));
    if (!keys.contains(key)) {
      throw InputError("--params: unknown key '" + key + "' for family " +
                       std::string(family_name(family)));
    }
    std::vector<std::string> &list = grid.values[key];
    for (std::string_view item : split(part.substr(eq + 1), ',')) {
      if (item.empty()) {
        continue;
      }
      const std::size_t dots = item.find("..");
      if (key == "eps") {
        if (dots != std::string_view::npos) {
          throw InputError("--params eps: ranges are not supported, list values");
        }
        Rational::parse(item); // validate
        list.emplace_back(item);
        continue;
      }
      if (dots == std::string_view::npos) {
        list.emplace_back(std::to_string(parse_count(item, key)));
        continue;
      }
      const std::size_t lo = parse_count(trim(item.substr(0, dots)), key);
      const std::size_t hi = parse_count(trim(item.substr(dots + 2)), key);
      if (hi >= lo && hi - lo >= kMaxRangeLength) {
        throw InputError("--params " + key + ": range too long");
      }
      for (std::size_t v = lo; v <= hi && hi >= lo; ++v) {
        list.push_back(std::to_string(v));
      }
    }
  }
  return grid;
}

std::vector<Row> evaluate(const Grid &grid) {
  struct Point {
    std::size_t size;
    std::size_t band;
    std::string eps;
  };
  std::vector<Point> points;
  switch (grid.family) {
  case Family::band:
    for (std::size_t p : counts(grid, "p")) {
      for (std::size_t n : counts(grid, "N")) {
        if (n >= 1 && n < p) {
          points.push_back({p, n, {}});
        }
      }
    }
    break;
  case Family::circulant:
    for (std::size_t m : counts(grid, "m")) {
      for (std::size_t n : counts(grid, "N")) {
        if (m >= 3 && n >= 1 && n <= m / 2) {
          points.push_back({m, n, {}});
        }
      }
    }
    break;
  case Family::circle:
    for (std::size_t p : counts(grid, "p")) {
      if (p < 3) {
        throw InputError("--params p: the circle needs p >= 3");
      }
      for (const std::string &e : grid.values.at("eps")) {
        const Rational eps = Rational::parse(e);
        if (eps <= Rational(1, static_cast<std::int64_t>(p))) {
          throw InputError("--params eps: " + e + " <= 1/" + std::to_string(p) +
                           " leaves the circle disconnected");
        }
        points.push_back({p, std::min(point_band(p, eps), p / 2), e});
      }
    }
    break;
  }

  return par::map_indices<Row>(points.size(), [&](std::size_t k) {
    const Point &pt = points[k];
    Row row;
    row.size = pt.size;
    row.band = pt.band;
    row.eps = pt.eps;
    switch (grid.family) {
    case Family::band:
      row.predicted = band_ceil_p_over_n(pt.size, pt.band);
      row.formula = ceil_div(pt.size - 1, pt.band);
      return measure(band_relation(pt.size, pt.band), row);
    case Family::circulant:
      row.predicted = ceil_div(pt.size / 2, pt.band);
      row.formula = row.predicted;
      return measure(circulant_band_relation(pt.size, pt.band), row);
    case Family::circle: {
      const Rational eps = Rational::parse(pt.eps);
      const FiniteMetric metric = circle_metric(pt.size);
      row.predicted = prop_from_metric_theorem(metric, eps).predicted;
      row.formula = ceil_div(pt.size / 2, pt.band);
      return measure(circle_relation(pt.size, eps), row);
    }
    }
    return row;
  });
}

std::string csv_header(Family family) {
  switch (family) {
  case Family::band:
    return "family,p,N,ceil_p_over_N,diameter_formula,propagation,bfs_diameter,"
           "algebra_degree,oracle_agrees,ceil_p_over_N_differs\n";
  case Family::circulant:
    return "family,m,N,ceil_half_m_over_N,diameter_formula,propagation,bfs_diameter,"
           "algebra_degree,oracle_agrees,ceil_half_m_over_N_differs\n";
  case Family::circle:
    return "family,p,eps,N,ceil_delta_over_eps,diameter_formula,propagation,"
           "bfs_diameter,algebra_degree,oracle_agrees,ceil_delta_over_eps_differs\n";
  }
  return {};
}

std::string to_csv(Family family, const std::vector<Row> &rows) {
  std::string out = csv_header(family);
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const Row &r : rows) {
    out += family_name(family);
    out += ',' + std::to_string(r.size);
    if (family == Family::circle) {
      out += ',' + r.eps;
    }
    out += ',' + std::to_string(r.band);
    out += ',' + std::to_string(r.predicted);
    out += ',' + std::to_string(r.formula);
    out += ',' + std::to_string(r.propagation);
    out += ',' + std::to_string(r.bfs_diameter);
    out += ',' + std::to_string(r.algebra_degree);
    out += ',';
    out += flag(r.oracle_agrees);
    out += ',';
    out += flag(r.predicted_differs);
    out += '\n';
  }
  return out;
}

} // namespace tolsys::sweep
