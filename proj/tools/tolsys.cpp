// tolsys: command-line front end.
//
//   tolsys analyze <relation.json> [--seed S] [--timing]
//   tolsys verify <suite|all> [--seed S] [--n N] [--trials T] [--p P] [--out F]
//   tolsys sweep --family band|circulant|circle --params "p=4..12;N=1..3" [--out F]
//   tolsys states <relation.json> --vector <v.json>
//   tolsys states --functional <f.json>
//   tolsys metric-check (--circle P | --metric m.csv | --graph g.json) --eps1 A --eps2 B
//   tolsys partition --p P --eps E
//
// JSON/CSV goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 assertion failure, 2 malformed input, 3 invariant
// violation in the input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tolsys/error.hpp"
#include "tolsys/finite_metric.hpp"
#include "tolsys/invariants.hpp"
#include "tolsys/io.hpp"
#include "tolsys/metric_lab.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/parallel.hpp"
#include "tolsys/rational.hpp"
#include "tolsys/relation.hpp"
#include "tolsys/states.hpp"
#include "tolsys/sweep.hpp"
#include "tolsys/verify.hpp"

namespace {

using nlohmann::json;
using namespace tolsys;

enum Exit { kOk = 0, kAssertion = 1, kMalformed = 2, kInvariant = 3 };

json optional_size(const std::optional<std::size_t> &v) {
  return v ? json(*v) : json(nullptr);
}

void emit(const json &doc) { std::cout << doc.dump(2) << '\n'; }

void write_output(const std::string &path, const std::string &bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << bytes) || !out.flush()) {
    throw InputError("cannot write output file " + path);
  }
}

json input_descriptor(const std::string &path, const std::string &bytes) {
  return {{"path", path}, {"hash", "fnv1a64:" + io::content_hash(bytes)}};
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string path;
  std::uint64_t seed = 42;
  bool timing = false;
};

int cmd_analyze(const AnalyzeArgs &a) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = io::read_file(a.path);
  const Relation r = io::parse_relation(bytes);

  const Propagation prop = propagation_number(r);
  const std::vector<std::size_t> blocks = cstar_envelope_blocks(r);
  const std::optional<std::size_t> diam = diameter(r);
  const std::optional<std::size_t> bfs = diameter_bfs(r);
  const AlgebraDegree degree = generated_algebra_degree(r);

  json closed_form = nullptr;
  bool closed_form_agrees = true;
  if (prop.connected && r.size() > 1) {
    if (auto w = detect_band_width(r)) {
      const std::size_t value = band_diameter_closed_form(r.size(), *w);
      closed_form = {{"family", "band"}, {"N", *w}, {"value", value},
                     {"ceil_p_over_N", band_ceil_p_over_n(r.size(), *w)}};
      closed_form_agrees = value == bfs;
    } else if (auto c = detect_circulant_band_width(r)) {
      const std::size_t value = circulant_diameter_closed_form(r.size(), *c);
      closed_form = {{"family", "circulant"}, {"N", *c}, {"value", value}};
      closed_form_agrees = value == bfs;
    }
  }

  const json agreement = {
      {"propagation_vs_algebra_degree", prop.value == degree.degree},
      {"diameter_vs_bfs", diam == bfs},
      {"envelope_vs_algebra_blocks", blocks == degree.blocks},
      {"closed_form_vs_bfs", closed_form_agrees}};
  bool agrees = true;
  for (const auto &item : agreement.items()) {
    agrees = agrees && item.value().get<bool>();
  }

  json report = {
      {"input", input_descriptor(a.path, bytes)},
      {"n", r.size()},
      {"edges", r.edge_count()},
      {"connected", prop.connected},
      {"diameter", optional_size(diam)},
      {"propagation", prop.value},
      {"propagation_per_component", prop.per_component},
      {"envelope_blocks", blocks},
      {"oracle",
       {{"bfs_diameter", optional_size(bfs)},
        {"algebra_degree", degree.degree},
        {"algebra_blocks", degree.blocks},
        {"closed_form", closed_form}}},
      {"agreement", agreement},
      {"oracle_agrees", agrees},
      {"seed", a.seed},
      {"tolerances", {{"comparison", "exact integer"}}}};
  if (a.timing) {
    report["timing_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  emit(report);
  return agrees ? kOk : kAssertion;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  verify::Config config;
  std::string out;
};

int cmd_verify(const VerifyArgs &a) {
  if (!verify::is_suite(a.suite)) {
    throw InputError("unknown suite '" + a.suite + "'");
  }
  verify::Report report;
  try {
    report = verify::run(a.suite, a.config);
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  for (const auto &s : report.suites) {
    std::cerr << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.passed
              << '/' << s.total << '\n';
    if (!s.ok() && s.reproducer) {
      std::cerr << "  reproducer (seed " << a.config.seed << "): "
                << s.reproducer->dump() << '\n';
    }
  }
  write_output(a.out, report.to_json(a.config).dump(2) + "\n");
  return report.ok() ? kOk : kAssertion;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string family;
  std::string params;
  std::string out;
};

int cmd_sweep(const SweepArgs &a) {
  const sweep::Family family = sweep::parse_family(a.family);
  const sweep::Grid grid = sweep::parse_grid(family, a.params);
  const auto rows = sweep::evaluate(grid);
  write_output(a.out, sweep::to_csv(family, rows));
  bool agrees = true;
  for (const auto &row : rows) {
    agrees = agrees && row.oracle_agrees;
  }
  return agrees ? kOk : kAssertion;
}

// ------------------------------------------------------------------ states

struct StatesArgs {
  std::string relation;
  std::string vector;
  std::string functional;
};

json classes_json(const std::vector<std::vector<std::size_t>> &classes) {
  json out = json::array();
  for (const auto &c : classes) {
    out.push_back(c);
  }
  return out;
}

int states_vector(const StatesArgs &a) {
  const std::string rel_bytes = io::read_file(a.relation);
  const std::string vec_bytes = io::read_file(a.vector);
  const Relation r = io::parse_relation(rel_bytes);
  const VectorState v = io::vector_from_json(json::parse(vec_bytes));
  if (v.size() != r.size()) {
    throw InputError("vector has " + std::to_string(v.size()) +
                     " entries but the relation has n = " + std::to_string(r.size()));
  }
  const bool pure = is_pure_restricted(r, v);
  const ExtremalityOptions opts;
  const auto split = find_state_decomposition(r, v, opts);
  const bool extreme = !split.has_value();
  json decomposition = nullptr;
  if (split) {
    decomposition = {{"weight", split->weight},
                     {"first", io::functional_to_json(split->first)["entries"]},
                     {"second", io::functional_to_json(split->second)["entries"]}};
  }
  emit({{"input",
         {{"relation", input_descriptor(a.relation, rel_bytes)},
          {"vector", input_descriptor(a.vector, vec_bytes)}}},
        {"support", v.support()},
        {"eps_connected_classes", classes_json(support_classes(r, v))},
        {"is_pure", pure},
        {"oracle_extreme", extreme},
        {"oracle_agrees", pure == extreme},
        {"decomposition", decomposition},
        {"seed", opts.seed},
        {"tolerances",
         {{"support", 1e-10},
          {"certificate", opts.certificate_tol},
          {"min_separation", opts.min_separation}}}});
  return pure == extreme ? kOk : kAssertion;
}

std::string verdict_name(Verdict v) {
  switch (v) {
  case Verdict::positive:
    return "positive";
  case Verdict::not_positive:
    return "not_positive";
  case Verdict::undetermined:
    return "undetermined";
  }
  return "?";
}

int states_functional(const StatesArgs &a) {
  const std::string bytes = io::read_file(a.functional);
  const std::filesystem::path base = std::filesystem::path(a.functional).parent_path();
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error &e) {
    throw InputError(a.functional + ": invalid JSON: " + e.what());
  }
  const HermitianFunctional phi = io::functional_from_json(doc, base);
  const CompletionOptions copts;
  const TraceNormOptions topts;
  const DualPositivity pos = dual_positive(phi, copts);
  const JordanDecomposition j = jordan_decompose(phi, topts);
  const double gap = j.norm - j.norm_lower;
  emit({{"input", input_descriptor(a.functional, bytes)},
        {"n", phi.size()},
        {"trace", phi.trace()},
        {"dual_positive",
         {{"verdict", verdict_name(pos.verdict)},
          {"residual", pos.residual},
          {"iterations", pos.iterations}}},
        {"norm", {{"upper", j.norm}, {"lower", j.norm_lower}}},
        {"jordan",
         {{"plus", io::functional_to_json(j.plus)["entries"]},
          {"minus", io::functional_to_json(j.minus)["entries"]},
          {"plus_trace", j.plus_trace},
          {"minus_trace", j.minus_trace}}},
        {"seed", topts.seed},
        {"tolerances",
         {{"accept", copts.accept},
          {"reject", copts.reject},
          {"certificate", copts.certificate_tol},
          {"bracket", 1e-3}}}});
  return gap <= 1e-3 * std::max(1.0, j.norm) ? kOk : kAssertion;
}

int cmd_states(const StatesArgs &a) {
  if (!a.functional.empty()) {
    if (!a.relation.empty() || !a.vector.empty()) {
      throw InputError("--functional cannot be combined with a relation or --vector");
    }
    return states_functional(a);
  }
  if (a.relation.empty() || a.vector.empty()) {
    throw InputError("states needs <relation.json> --vector <v.json> or --functional <f.json>");
  }
  return states_vector(a);
}

// ------------------------------------------------------------ metric-check

struct MetricArgs {
  std::optional<std::size_t> circle;
  std::string metric;
  std::string graph;
  std::string eps1;
  std::string eps2;
};

int cmd_metric_check(const MetricArgs &a) {
  const int sources = (a.circle ? 1 : 0) + (a.metric.empty() ? 0 : 1) +
                      (a.graph.empty() ? 0 : 1);
  if (sources != 1) {
    throw InputError("give exactly one of --circle, --metric, --graph");
  }
  const Rational eps1 = Rational::parse(a.eps1);
  const Rational eps2 = Rational::parse(a.eps2);
  if (eps1 <= Rational(0, 1) || eps2 <= Rational(0, 1)) {
    throw InputError("--eps1 and --eps2 must be positive");
  }
  json source;
  std::optional<FiniteMetric> metric;
  if (a.circle) {
    if (*a.circle < 3) {
      throw InputError("--circle needs p >= 3");
    }
    metric = circle_metric(*a.circle);
    source = {{"kind", "circle"}, {"p", *a.circle}};
  } else if (!a.metric.empty()) {
    const std::string bytes = io::read_file(a.metric);
    metric = io::parse_metric_csv(bytes);
    source = {{"kind", "csv"}, {"input", input_descriptor(a.metric, bytes)}};
  } else {
    const std::string bytes = io::read_file(a.graph);
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error &e) {
      throw InputError(a.graph + ": invalid JSON: " + e.what());
    }
    const io::WeightedGraph g = io::weighted_graph_from_json(doc);
    metric = graph_metric(g.n, g.edges);
    source = {{"kind", "graph"}, {"input", input_descriptor(a.graph, bytes)}};
  }
  source["n"] = metric->size();
  source["diameter"] = metric->diameter();

  const CompositionLawReport rep = composition_law_check(*metric, eps1, eps2);
  json missing = json::array();
  for (auto [i, j] : rep.missing_pairs) {
    if (missing.size() == 100) {
      break;
    }
    missing.push_back({i, j});
  }
  json theorem = nullptr;
  const Relation r1 = epsilon_relation(*metric, eps1);
  if (connected_components(r1).size() == 1) {
    const MetricPropagationCheck check = prop_from_metric_theorem(*metric, eps1);
    theorem = {{"eps", eps1.to_string()},
               {"ceil_delta_over_eps", check.predicted},
               {"propagation", check.actual},
               {"agrees", check.agrees}};
  }
  emit({{"metric", source},
        {"eps1", eps1.to_string()},
        {"eps2", eps2.to_string()},
        {"inclusion", rep.inclusion},
        {"holds", rep.holds},
        {"missing_pair_count", rep.missing_pairs.size()},
        {"missing_pairs", missing},
        {"propagation_check", theorem},
        {"tolerances", {{"comparison", "exact rational thresholds"}}}});
  return rep.inclusion ? kOk : kAssertion;
}

// --------------------------------------------------------------- partition

struct PartitionArgs {
  std::size_t p = 0;
  std::string eps;
};

int cmd_partition(const PartitionArgs &a) {
  if (a.p == 0) {
    throw InputError("--p must be positive");
  }
  const Rational eps = Rational::parse(a.eps);
  PartitionRelation part = [&] {
    try {
      return partition_relation(a.p, eps);
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
  }();
  const Propagation prop = propagation_number(part.relation);
  json formula = nullptr;
  json ceil_p = nullptr;
  if (part.band >= 1 && part.band < a.p) {
    formula = band_diameter_closed_form(a.p, part.band);
    ceil_p = band_ceil_p_over_n(a.p, part.band);
  }
  emit({{"p", a.p},
        {"eps", eps.to_string()},
        {"band", part.band},
        {"point_band", part.point_band},
        {"relation_summary",
         {{"n", part.relation.size()},
          {"edges", part.relation.edge_count()},
          {"full", part.relation.is_full()},
          {"connected", prop.connected}}},
        {"propagation", prop.value},
        {"diameter_formula", formula},
        {"ceil_p_over_N", ceil_p}});
  return kOk;
}

void check_thread_env() {
  const char *env = std::getenv("TOLSYS_THREADS");
  if (env == nullptr) {
    return;
  }
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0' || v <= 0) {
    throw InputError(std::string("TOLSYS_THREADS must be a positive integer, got '") +
                     env + "'");
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite tolerance relations, their operator systems and invariants"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto *c_analyze = app.add_subcommand("analyze", "Invariants of a relation file");
  c_analyze->add_option("relation", analyze.path, "relation JSON")->required();
  c_analyze->add_option("--seed", analyze.seed, "seed recorded in the report");
  c_analyze->add_flag("--timing", analyze.timing, "add wall-clock milliseconds");

  VerifyArgs verify_args;
  std::optional<std::size_t> v_n;
  std::optional<std::size_t> v_trials;
  std::optional<std::size_t> v_p;
  auto *c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("suite", verify_args.suite,
                       "schur-lemma, propagation, product-support, jordan, purity, "
                       "composition-law, numerical-radius or all")
      ->required();
  c_verify->add_option("--seed", verify_args.config.seed, "master seed");
  c_verify->add_option("--n", v_n, "size override");
  c_verify->add_option("--trials", v_trials, "instance count override");
  c_verify->add_option("--p", v_p, "grid size override");
  c_verify->add_option("--out", verify_args.out, "write the report here instead of stdout");

  SweepArgs sweep_args;
  auto *c_sweep = app.add_subcommand("sweep", "Tabulate a family of relations as CSV");
  c_sweep->add_option("--family", sweep_args.family, "band, circulant or circle")->required();
  c_sweep->add_option("--params", sweep_args.params, "grid, e.g. \"p=4..12;N=1..3\"");
  c_sweep->add_option("--out", sweep_args.out, "CSV path (default stdout)");

  StatesArgs states_args;
  auto *c_states = app.add_subcommand("states", "Restricted vector states and functionals");
  c_states->add_option("relation", states_args.relation, "relation JSON");
  c_states->add_option("--vector", states_args.vector, "vector JSON");
  c_states->add_option("--functional", states_args.functional, "functional JSON");

  MetricArgs metric_args;
  auto *c_metric = app.add_subcommand("metric-check", "Composition law R_a * R_b = R_(a+b)");
  c_metric->add_option("--circle", metric_args.circle, "discretised circle with p points");
  c_metric->add_option("--metric", metric_args.metric, "distance matrix CSV");
  c_metric->add_option("--graph", metric_args.graph, "weighted graph JSON");
  c_metric->add_option("--eps1", metric_args.eps1, "first threshold (decimal)")->required();
  c_metric->add_option("--eps2", metric_args.eps2, "second threshold (decimal)")->required();

  PartitionArgs partition_args;
  auto *c_partition = app.add_subcommand("partition", "Uniform interval partition relation");
  c_partition->add_option("--p", partition_args.p, "number of cells")->required();
  c_partition->add_option("--eps", partition_args.eps, "threshold (decimal)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    check_thread_env();
    if (*c_analyze) {
      return cmd_analyze(analyze);
    }
    if (*c_verify) {
      verify_args.config.n = v_n;
      verify_args.config.trials = v_trials;
      verify_args.config.p = v_p;
      return cmd_verify(verify_args);
    }
    if (*c_sweep) {
      return cmd_sweep(sweep_args);
    }
    if (*c_states) {
      return cmd_states(states_args);
    }
    if (*c_metric) {
      return cmd_metric_check(metric_args);
    }
    if (*c_partition) {
      return cmd_partition(partition_args);
    }
  } catch (const InvariantError &e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const InputError &e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const json::exception &e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::invalid_argument &e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::overflow_error &e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertion;
  }
  return kOk;
}
