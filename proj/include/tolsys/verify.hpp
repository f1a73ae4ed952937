#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tolsys::verify {

using nlohmann::json;

/// Scale overrides; unset fields take the per-suite defaults.
struct Config {
  std::uint64_t seed = 42;
  std::optional<std::size_t> n;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> p;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// Scale actually used (after defaults) and tolerances.
  json scale = json::object();
  json tolerances = json::object();
  /// Largest observed residuals, keyed by quantity.
  json residuals = json::object();
  /// Extra counts worth reporting (e.g. rows where two formulas differ).
  json details = json::object();
  /// First failing instance: enough to rerun it by hand.
  std::optional<json> reproducer;

  bool ok() const { return passed == total; }
  json to_json() const;
};

/// schur-lemma, propagation, product-support, jordan, purity,
/// composition-law, numerical-radius.
const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);

/// Throws std::invalid_argument for an unknown suite or an out-of-range
/// scale override.
SuiteResult run_suite(const std::string &name, const Config &config);

struct Report {
  std::vector<SuiteResult> suites;
  bool ok() const;
  /// Canonical JSON: suites in the order of suite_names(), no timings.
  json to_json(const Config &config) const;
};

/// `name` may be "all".
Report run(const std::string &name, const Config &config);

} // namespace tolsys::verify
