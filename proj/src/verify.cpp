#include "tolsys/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "tolsys/finite_metric.hpp"
#include "tolsys/generators.hpp"
#include "tolsys/invariants.hpp"
#include "tolsys/io.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/metric_lab.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/parallel.hpp"
#include "tolsys/states.hpp"

namespace tolsys::verify {

namespace {

using Index = Eigen::Index;

struct Outcome {
  bool ok = true;
  std::vector<std::pair<std::string, double>> residuals;
  json reproducer;

  void residual(const std::string &key, double value) {
    residuals.emplace_back(key, value);
  }
  void fail(json repro) {
    ok = false;
    reproducer = std::move(repro);
  }
};

// Folds per-instance outcomes in index order.
void fold(SuiteResult &out, const std::vector<Outcome> &outcomes) {
  for (const Outcome &o : outcomes) {
    ++out.total;
    if (o.ok) {
      ++out.passed;
    } else if (!out.reproducer) {
      out.reproducer = o.reproducer;
    }
    for (const auto &[key, value] : o.residuals) {
      if (!out.residuals.contains(key) || out.residuals[key].get<double>() < value) {
        out.residuals[key] = value;
      }
    }
  }
}

std::size_t pick(const std::optional<std::size_t> &v, std::size_t fallback,
                 std::size_t lo, std::size_t hi, const char *flag) {
  const std::size_t value = v.value_or(fallback);
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(flag) + " must be in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "], got " + std::to_string(value));
  }
  return value;
}

double rel_scale(double x) { return std::max(1.0, std::abs(x)); }

json matrix_json(const CMatrix &m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const CVector &v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    out.push_back({v(i).real(), v(i).imag()});
  }
  return out;
}

// ------------------------------------------------------------ schur-lemma

SuiteResult schur_lemma(const Config &cfg) {
  SuiteResult out;
  out.name = "schur-lemma";
  const std::size_t n = pick(cfg.n, 5, 1, 7, "--n");
  const std::size_t count = std::size_t{1} << pair_count(n);
  out.scale = {{"n", n}, {"relations", count}};
  out.tolerances = {{"psd", kPsdTol}, {"indefinite_example", 1e-9}};

  struct Row {
    Outcome outcome;
    bool transitive = false;
  };
  auto rows = par::map_indices<Row>(count, [&](std::size_t mask) {
    Row row;
    const Relation r = relation_from_mask(n, mask);
    const CMatrix l = indicator_matrix(r);
    const double lambda = min_eigenvalue(l);
    const bool psd = is_psd(l);
    const bool triangle = is_equivalence_via_triangle(r);
    row.transitive = r.is_transitive();
    if (row.transitive) {
      row.outcome.residual("psd_violation_on_equivalences", std::max(0.0, -lambda));
    } else {
      // Margin by which non-equivalences miss the PSD cone.
      row.outcome.residual("max_min_eigenvalue_on_non_equivalences", lambda);
    }
    if (psd != triangle || triangle != row.transitive) {
      row.outcome.fail({{"mask", mask},
                        {"relation", io::relation_to_json(r)},
                        {"psd", psd},
                        {"triangle", triangle},
                        {"transitive", row.transitive},
                        {"min_eigenvalue", lambda}});
    }
    return row;
  });
  std::vector<Outcome> outcomes;
  std::size_t equivalences = 0;
  for (auto &row : rows) {
    equivalences += row.transitive ? 1 : 0;
    outcomes.push_back(std::move(row.outcome));
  }

  // The indefinite path pattern: characteristic polynomial
  // (1 - x)((1 - x)^2 - 2) gives 1 - sqrt(2).
  Outcome path;
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const double lambda =
      min_eigenvalue(indicator_matrix(Relation::from_edges(3, edges)));
  const double err = std::abs(lambda - (1.0 - std::sqrt(2.0)));
  path.residual("indefinite_example_error", err);
  if (err > 1e-9) {
    path.fail({{"example", "path 0-1-2"}, {"min_eigenvalue", lambda}});
  }
  outcomes.push_back(std::move(path));

  fold(out, outcomes);
  out.details = {{"equivalence_relations", equivalences},
                 {"indefinite_example_min_eigenvalue", lambda}};
  return out;
}

// ------------------------------------------------------------ propagation

Outcome propagation_instance(const Relation &r, json key) {
  Outcome o;
  const Propagation prop = propagation_number(r);
  const AlgebraDegree deg = generated_algebra_degree(r);
  const auto blocks = cstar_envelope_blocks(r);
  bool agree = prop.value == deg.degree && blocks == deg.blocks;
  std::optional<std::size_t> bfs;
  if (prop.connected) {
    bfs = diameter_bfs(r);
    agree = agree && bfs && *bfs == prop.value &&
            diameter_bfs_serial(r) == bfs;
  }
  if (!agree) {
    key["relation"] = io::relation_to_json(r);
    key["propagation"] = prop.value;
    key["algebra_degree"] = deg.degree;
    key["bfs_diameter"] = bfs ? json(*bfs) : json(nullptr);
    o.fail(std::move(key));
  }
  return o;
}

SuiteResult propagation(const Config &cfg) {
  SuiteResult out;
  out.name = "propagation";
  const std::size_t n_max = pick(cfg.n, 8, 1, 64, "--n");
  const std::size_t trials = pick(cfg.trials, 200, 0, 100000, "--trials");
  const std::size_t p_max = pick(cfg.p, 12, 2, 256, "--p");
  const std::size_t exhaustive_n = std::min<std::size_t>(4, n_max);
  out.scale = {{"exhaustive_n", exhaustive_n},
               {"random_connected", trials},
               {"random_n_max", n_max},
               {"table_p_max", p_max},
               {"circle_p", 1000}};
  out.tolerances = {{"comparison", "exact integer"}};

  // Exhaustive small relations.
  std::vector<std::pair<std::size_t, std::uint64_t>> small;
  for (std::size_t n = 1; n <= exhaustive_n; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      small.emplace_back(n, mask);
    }
  }
  fold(out, par::map_indices<Outcome>(small.size(), [&](std::size_t k) {
         auto [n, mask] = small[k];
         return propagation_instance(relation_from_mask(n, mask),
                                     {{"kind", "exhaustive"}, {"mask", mask}});
       }));

  // Seeded connected relations.
  fold(out, par::map_indices<Outcome>(trials, [&](std::size_t k) {
         const std::uint64_t seed = derive_seed(cfg.seed, k);
         Rng rng(seed);
         const std::size_t n = uniform_size(1, n_max, rng);
         const Relation r = random_connected_relation(n, 0.25, rng);
         return propagation_instance(r, {{"kind", "random"}, {"instance", k}, {"seed", seed}});
       }));

  // Band and circulant tables.
  std::size_t band_rows = 0;
  std::size_t p_over_n_differs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> bands;
  for (std::size_t p = 2; p <= p_max; ++p) {
    for (std::size_t nb = 1; nb < p; ++nb) {
      bands.emplace_back(p, nb);
    }
  }
  fold(out, par::map_indices<Outcome>(bands.size(), [&](std::size_t k) {
         auto [p, nb] = bands[k];
         Outcome o;
         const Relation r = band_relation(p, nb);
         const std::size_t formula = (p - 1 + nb - 1) / nb;
         const std::size_t prop = propagation_number(r).value;
         const std::size_t degree = generated_algebra_degree(r).degree;
         const std::size_t bfs = diameter_bfs(r).value_or(0);
         if (prop != formula || degree != formula || bfs != formula) {
           o.fail({{"family", "band"}, {"p", p}, {"N", nb}, {"formula", formula},
                   {"propagation", prop}, {"algebra_degree", degree}, {"bfs", bfs}});
         }
         return o;
       }));
  for (auto [p, nb] : bands) {
    ++band_rows;
    p_over_n_differs += band_ceil_p_over_n(p, nb) != (p - 1 + nb - 1) / nb ? 1 : 0;
  }
  std::vector<std::pair<std::size_t, std::size_t>> circ;
  for (std::size_t m = 3; m <= p_max; ++m) {
    for (std::size_t nb = 1; nb <= m / 2; ++nb) {
      circ.emplace_back(m, nb);
    }
  }
  fold(out, par::map_indices<Outcome>(circ.size(), [&](std::size_t k) {
         auto [m, nb] = circ[k];
         Outcome o;
         const Relation r = circulant_band_relation(m, nb);
         const std::size_t formula = (m / 2 + nb - 1) / nb;
         const std::size_t prop = propagation_number(r).value;
         const std::size_t degree = generated_algebra_degree(r).degree;
         const std::size_t bfs = diameter_bfs(r).value_or(0);
         if (prop != formula || degree != formula || bfs != formula) {
           o.fail({{"family", "circulant"}, {"m", m}, {"N", nb}, {"formula", formula},
                   {"propagation", prop}, {"algebra_degree", degree}, {"bfs", bfs}});
         }
         return o;
       }));

  // Discretised circle at refinement scale.
  const FiniteMetric circle = circle_metric(1000);
  const std::vector<std::pair<const char *, std::size_t>> scales{
      {"0.3", 2}, {"0.21", 3}, {"0.11", 5}};
  json circle_rows = json::array();
  std::vector<Outcome> circle_outcomes;
  for (auto [text, expected] : scales) {
    const Rational eps = Rational::parse(text);
    const MetricPropagationCheck check = prop_from_metric_theorem(circle, eps);
    const std::size_t degree = generated_algebra_degree(circle_relation(1000, eps)).degree;
    Outcome o;
    if (!check.agrees || check.actual != expected || degree != expected) {
      o.fail({{"family", "circle"}, {"p", 1000}, {"eps", text},
              {"predicted", check.predicted}, {"actual", check.actual},
              {"algebra_degree", degree}, {"expected", expected}});
    }
    circle_outcomes.push_back(std::move(o));
    circle_rows.push_back({{"eps", text}, {"predicted", check.predicted},
                           {"actual", check.actual}, {"algebra_degree", degree}});
  }
  fold(out, circle_outcomes);

  out.details = {{"band_rows", band_rows},
                 {"band_rows_where_ceil_p_over_N_differs", p_over_n_differs},
                 {"circulant_rows", circ.size()},
                 {"circle", std::move(circle_rows)}};
  return out;
}

// -------------------------------------------------------- product-support

SuiteResult product_support(const Config &cfg) {
  SuiteResult out;
  out.name = "product-support";
  const std::size_t n_max = pick(cfg.n, 6, 1, 32, "--n");
  const std::size_t trials = pick(cfg.trials, 100, 0, 100000, "--trials");
  constexpr std::size_t kDraws = 8;
  out.scale = {{"pairs", trials}, {"n_max", n_max}, {"generic_draws", kDraws}};
  out.tolerances = {{"support_zero", kSupportZero}};
  fold(out, par::map_indices<Outcome>(trials, [&](std::size_t k) {
         const std::uint64_t seed = derive_seed(cfg.seed, k);
         Rng rng(seed);
         const std::size_t n = uniform_size(1, n_max, rng);
         const Relation r1 = random_relation(n, 0.4, rng);
         const Relation r2 = random_relation(n, 0.4, rng);
         Outcome o;
         const BoolMatrix sampled = product_span_support(r1, r2, kDraws, rng());
         const BoolMatrix expected = symmetrized_compose(r1, r2).adj();
         if (!(sampled == expected)) {
           o.fail({{"instance", k}, {"seed", seed},
                   {"r1", io::relation_to_json(r1)},
                   {"r2", io::relation_to_json(r2)}});
         }
         return o;
       }));
  return out;
}

// ----------------------------------------------------------------- jordan

SuiteResult jordan(const Config &cfg) {
  SuiteResult out;
  out.name = "jordan";
  const std::size_t n_max = pick(cfg.n, 5, 1, 8, "--n");
  const std::size_t trials = pick(cfg.trials, 200, 0, 100000, "--trials");
  const TraceNormOptions defaults;
  out.scale = {{"functionals", trials}, {"n_max", n_max}};
  out.tolerances = {{"additivity", 1e-3},
                    {"bracket", 1e-3},
                    {"decomposition", 1e-12},
                    {"positive_norm_vs_trace", 1e-6},
                    {"subgradient_iterations", defaults.subgradient_iterations},
                    {"admm_iterations", defaults.admm_iterations},
                    {"lower_bound_samples", defaults.lower_bound_samples}};
  fold(out, par::map_indices<Outcome>(trials, [&](std::size_t k) {
         const std::uint64_t seed = derive_seed(cfg.seed, k);
         Rng rng(seed);
         const std::size_t n = uniform_size(1, n_max, rng);
         const Relation r = random_relation(n, 0.5, rng);
         const HermitianFunctional phi(r, random_hermitian_element(r, rng));
         TraceNormOptions opts;
         opts.seed = rng();
         const JordanDecomposition j = jordan_decompose(phi, opts);
         const double plus_norm = dual_norm_hermitian(j.plus, opts);
         const double minus_norm = dual_norm_hermitian(j.minus, opts);
         const double scale = rel_scale(j.norm);
         const double additivity = std::abs(j.norm - (plus_norm + minus_norm)) / scale;
         const double bracket = (j.norm - j.norm_lower) / scale;
         const double split =
             (j.plus.rep() - j.minus.rep() - phi.rep()).cwiseAbs().maxCoeff() /
             rel_scale(phi.rep().cwiseAbs().maxCoeff());
         const double positive =
             std::max(std::abs(plus_norm - j.plus.trace()) / rel_scale(plus_norm),
                      std::abs(minus_norm - j.minus.trace()) / rel_scale(minus_norm));
         Outcome o;
         o.residual("additivity_relative", additivity);
         o.residual("bracket_gap_relative", bracket);
         o.residual("decomposition_error", split);
         o.residual("positive_norm_minus_trace", positive);
         if (additivity > 1e-3 || bracket > 1e-3 || split > 1e-12 || positive > 1e-6) {
           o.fail({{"instance", k}, {"seed", seed},
                   {"relation", io::relation_to_json(r)},
                   {"rep", matrix_json(phi.rep())},
                   {"norm", j.norm}, {"norm_lower", j.norm_lower},
                   {"plus_norm", plus_norm}, {"minus_norm", minus_norm}});
         }
         return o;
       }));
  return out;
}

// ----------------------------------------------------------------- purity

SuiteResult purity(const Config &cfg) {
  SuiteResult out;
  out.name = "purity";
  const std::size_t n_max = pick(cfg.n, 3, 1, 4, "--n");
  const std::size_t trials = pick(cfg.trials, 100, 0, 100000, "--trials");
  out.scale = {{"n_max", n_max}, {"random_vectors_per_relation", trials}};
  out.tolerances = {{"support", 1e-10}, {"certificate", 1e-8}, {"min_separation", 1e-4}};

  struct Case {
    std::size_t n;
    std::uint64_t mask;
    std::size_t vector; // < structured count: structured; else random
  };
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t structured = 2 * ((std::size_t{1} << n) - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      for (std::size_t v = 0; v < structured + trials; ++v) {
        cases.push_back({n, mask, v});
      }
    }
  }

  struct Row {
    Outcome outcome;
    bool pure = false;
  };
  auto rows = par::map_indices<Row>(cases.size(), [&](std::size_t k) {
    const Case &c = cases[k];
    const Relation r = relation_from_mask(c.n, c.mask);
    const std::size_t subsets = (std::size_t{1} << c.n) - 1;
    CVector x = CVector::Zero(static_cast<Index>(c.n));
    std::uint64_t seed = 0;
    if (c.vector < 2 * subsets) {
      // Uniform weights on a support subset, either real or with phases i^k.
      const std::size_t subset = c.vector % subsets + 1;
      const bool phased = c.vector >= subsets;
      for (std::size_t i = 0; i < c.n; ++i) {
        if ((subset >> i) & 1U) {
          x(static_cast<Index>(i)) =
              phased ? std::polar(1.0, 0.5 * M_PI * static_cast<double>(i)) : Complex(1.0, 0.0);
        }
      }
    } else {
      seed = derive_seed(cfg.seed, k);
      Rng rng(seed);
      for (std::size_t i = 0; i < c.n; ++i) {
        if (uniform_size(0, 2, rng) != 0) {
          x(static_cast<Index>(i)) = uniform_complex(rng);
        }
      }
      if (x.norm() == 0.0) {
        x(static_cast<Index>(uniform_size(0, c.n - 1, rng))) = 1.0;
      }
    }
    const VectorState v = VectorState::normalized(x);
    Row row;
    row.pure = is_pure_restricted(r, v);
    const bool extreme = extremality_oracle(r, v);
    if (row.pure != extreme) {
      row.outcome.fail({{"relation", io::relation_to_json(r)},
                        {"vector", vector_json(v.vector())},
                        {"seed", seed},
                        {"criterion", row.pure},
                        {"oracle", extreme}});
    }
    return row;
  });
  std::vector<Outcome> outcomes;
  std::size_t pure = 0;
  for (auto &row : rows) {
    pure += row.pure ? 1 : 0;
    outcomes.push_back(std::move(row.outcome));
  }
  fold(out, outcomes);
  out.details = {{"pure", pure}, {"not_pure", cases.size() - pure}};
  return out;
}

// -------------------------------------------------------- composition-law

// Thresholds off the 1/p grid; see README for grid-aligned thresholds.
const std::vector<std::pair<const char *, const char *>> kCirclePairs{
    {"0.0503", "0.0504"}, {"0.1002", "0.1003"}, {"0.1234", "0.2345"},
    {"0.0155", "0.3011"}, {"0.2001", "0.2498"}, {"0.0807", "0.1601"},
    {"0.3333", "0.1111"}, {"0.0011", "0.0022"}, {"0.1505", "0.1505"},
    {"0.2407", "0.0302"}};

SuiteResult composition_law(const Config &cfg) {
  SuiteResult out;
  out.name = "composition-law";
  const std::size_t p = pick(cfg.p, 1000, 3, 5000, "--p");
  const std::size_t n_max = pick(cfg.n, 8, 2, 64, "--n");
  const std::size_t trials = pick(cfg.trials, 50, 0, 100000, "--trials");
  out.scale = {{"circle_p", p}, {"circle_pairs", kCirclePairs.size()},
               {"graph_metrics", trials}, {"graph_n_max", n_max}};
  out.tolerances = {{"comparison", "exact rational thresholds"}};

  const FiniteMetric circle = circle_metric(p);
  json circle_rows = json::array();
  std::vector<Outcome> outcomes;
  // Band arithmetic on the circle: R_eps joins gaps up to ceil(eps p) - 1,
  // so equality holds exactly when the two bands reach the band of the sum.
  const auto circle_band = [p](const Rational &eps) {
    const std::int64_t raw = (eps * static_cast<std::int64_t>(p)).ceil() - 1;
    return std::min<std::int64_t>(std::max<std::int64_t>(raw, 0),
                                  static_cast<std::int64_t>(p / 2));
  };
  const auto expect_holds = [&](const Rational &e1, const Rational &e2) {
    return std::min(circle_band(e1) + circle_band(e2), static_cast<std::int64_t>(p / 2)) >=
           circle_band(e1 + e2);
  };
  std::size_t off_grid_holding = 0;
  for (auto [a, b] : kCirclePairs) {
    const Rational e1 = Rational::parse(a);
    const Rational e2 = Rational::parse(b);
    const CompositionLawReport rep = composition_law_check(circle, e1, e2);
    const bool expected = expect_holds(e1, e2);
    off_grid_holding += rep.holds ? 1 : 0;
    Outcome o;
    if (!rep.inclusion || rep.holds != expected) {
      o.fail({{"metric", "circle"}, {"p", p}, {"eps1", a}, {"eps2", b},
              {"expected_holds", expected}, {"missing_pairs", rep.missing_pairs.size()}});
    }
    outcomes.push_back(std::move(o));
    circle_rows.push_back(
        {{"eps1", a}, {"eps2", b}, {"holds", rep.holds}, {"expected_holds", expected}});
  }

  // Two points at distance 1: nothing lies in between.
  {
    const FiniteMetric two(2, {0.0, 1.0, 1.0, 0.0});
    const Rational eps = Rational::parse("0.6");
    const CompositionLawReport rep = composition_law_check(two, eps, eps);
    Outcome o;
    const bool expected = rep.inclusion && !rep.holds && rep.missing_pairs.size() == 1 &&
                          rep.missing_pairs.front() == Edge{0, 1};
    if (!expected) {
      o.fail({{"metric", "two points"}, {"eps1", "0.6"}, {"eps2", "0.6"},
              {"holds", rep.holds}});
    }
    outcomes.push_back(std::move(o));
  }
  fold(out, outcomes);

  // Inclusion on random graph metrics.
  fold(out, par::map_indices<Outcome>(trials, [&](std::size_t k) {
         const std::uint64_t seed = derive_seed(cfg.seed, k);
         Rng rng(seed);
         const std::size_t n = uniform_size(2, n_max, rng);
         const Relation shape = random_connected_relation(n, 0.3, rng);
         std::vector<WeightedEdge> edges;
         for (auto [a, b] : shape.edges()) {
           edges.push_back({a, b, static_cast<double>(uniform_size(1, 100, rng)) / 10.0});
         }
         const FiniteMetric m = graph_metric(n, edges);
         const auto top = static_cast<std::int64_t>(std::ceil(m.diameter() * 100.0));
         const Rational e1(static_cast<std::int64_t>(uniform_size(1, top, rng)), 100);
         const Rational e2(static_cast<std::int64_t>(uniform_size(1, top, rng)), 100);
         const CompositionLawReport rep = composition_law_check(m, e1, e2);
         Outcome o;
         if (!rep.inclusion) {
           o.fail({{"instance", k}, {"seed", seed}, {"metric", "graph"},
                   {"eps1", e1.to_string()}, {"eps2", e2.to_string()}});
         }
         return o;
       }));
  // Thresholds on the grid lose the outermost band: gap N1 + N2 + 1 is in
  // R_(eps1 + eps2) but has no midpoint.
  const Rational tenth = Rational::parse("0.1");
  const CompositionLawReport aligned = composition_law_check(circle, tenth, tenth);
  {
    Outcome o;
    if (!aligned.inclusion || aligned.holds != expect_holds(tenth, tenth)) {
      o.fail({{"metric", "circle"}, {"p", p}, {"eps1", "0.1"}, {"eps2", "0.1"},
              {"expected_holds", expect_holds(tenth, tenth)}});
    }
    fold(out, std::vector<Outcome>{std::move(o)});
  }
  out.details = {{"circle", std::move(circle_rows)},
                 {"circle_pairs_holding", off_grid_holding},
                 {"grid_aligned_0.1_0.1", {{"holds", aligned.holds},
                                           {"missing_pairs", aligned.missing_pairs.size()}}}};
  return out;
}

// ------------------------------------------------------- numerical-radius

SuiteResult numerical_radius_suite(const Config &cfg) {
  SuiteResult out;
  out.name = "numerical-radius";
  const std::size_t n_max = pick(cfg.n, 8, 1, 64, "--n");
  const std::size_t trials = pick(cfg.trials, 500, 0, 1000000, "--trials");
  out.scale = {{"elements", trials}, {"n_max", n_max}};
  out.tolerances = {{"relative", 1e-9}};
  fold(out, par::map_indices<Outcome>(trials, [&](std::size_t k) {
         const std::uint64_t seed = derive_seed(cfg.seed, k);
         Rng rng(seed);
         const std::size_t n = uniform_size(1, n_max, rng);
         const Relation r = random_relation(n, 0.5, rng);
         const PatternMatrix b = random_element(r, rng);
         const double nu = numerical_radius(r, b);
         const double sigma = operator_norm(b.entries());
         const double err = sigma > 0.0 ? std::abs(nu - sigma) / sigma : nu;
         Outcome o;
         o.residual("relative_error", err);
         if (err > 1e-9) {
           o.fail({{"instance", k}, {"seed", seed},
                   {"element", io::pattern_matrix_to_json(b)},
                   {"numerical_radius", nu}, {"top_singular_value", sigma}});
         }
         return o;
       }));
  return out;
}

using SuiteFn = SuiteResult (*)(const Config &);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"schur-lemma", schur_lemma},
      {"propagation", propagation},
      {"product-support", product_support},
      {"jordan", jordan},
      {"purity", purity},
      {"composition-law", composition_law},
      {"numerical-radius", numerical_radius_suite}};
  return suites;
}

} // namespace

json SuiteResult::to_json() const {
  json out = {{"suite", name},
              {"passed", passed},
              {"total", total},
              {"ok", ok()},
              {"scale", scale},
              {"tolerances", tolerances},
              {"max_residuals", residuals},
              {"details", details}};
  out["reproducer"] = reproducer ? *reproducer : json(nullptr);
  return out;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &entry : registry()) {
      out.push_back(entry.first);
    }
    return out;
  }();
  return names;
}

bool is_suite(const std::string &name) {
  const auto &names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string &name, const Config &config) {
  for (const auto &[key, fn] : registry()) {
    if (key == name) {
      return fn(config);
    }
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool Report::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult &s) { return s.ok(); });
}

json Report::to_json(const Config &config) const {
  json list = json::array();
  for (const SuiteResult &s : suites) {
    list.push_back(s.to_json());
  }
  json overrides = json::object();
  if (config.n) {
    overrides["n"] = *config.n;
  }
  if (config.trials) {
    overrides["trials"] = *config.trials;
  }
  if (config.p) {
    overrides["p"] = *config.p;
  }
  return {{"seed", config.seed},
          {"overrides", std::move(overrides)},
          {"ok", ok()},
          {"suites", std::move(list)}};
}

Report run(const std::string &name, const Config &config) {
  Report report;
  if (name == "all") {
    for (const auto &entry : registry()) {
      report.suites.push_back(entry.second(config));
    }
  } else {
    report.suites.push_back(run_suite(name, config));
  }
  return report;
}

} // namespace tolsys::verify
