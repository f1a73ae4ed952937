#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tolsys/finite_metric.hpp"
#include "tolsys/metric_lab.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/relation.hpp"
#include "tolsys/states.hpp"

namespace tolsys::io {

using nlohmann::json;

/// Whole file as bytes; InputError if unreadable.
std::string read_file(const std::filesystem::path &path);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(std::string_view bytes);

/// `{ "n": int, "edges": [[i, j], ...] }`, 0-based, loops implicit.
/// `{ "n": int, "adj": [[0|1, ...], ...] }` is also accepted; an asymmetric
/// or irreflexive `adj` raises InvariantError. Schema problems raise
/// InputError naming the offending entry.
Relation relation_from_json(const json &doc);
Relation parse_relation(std::string_view text);
Relation load_relation(const std::filesystem::path &path);
json relation_to_json(const Relation &r);

/// n rows of n comma-separated decimals. Shape and number errors raise
/// InputError with line/column; metric invariants raise InvariantError.
FiniteMetric parse_metric_csv(std::string_view text);
FiniteMetric load_metric_csv(const std::filesystem::path &path);
std::string metric_to_csv(const FiniteMetric &m);

/// `{ "n": int, "edges": [[i, j, length], ...] }`.
struct WeightedGraph {
  std::size_t n;
  std::vector<WeightedEdge> edges;
};
WeightedGraph weighted_graph_from_json(const json &doc);
WeightedGraph load_weighted_graph(const std::filesystem::path &path);

/// `{ "v": [x, [re, im], ...] }`; entries are reals or [re, im] pairs.
/// The vector is normalised; a zero vector raises InvariantError.
VectorState vector_from_json(const json &doc);
VectorState load_vector(const std::filesystem::path &path);

/// `{ "relation": {...} | "path.json", "entries": [[i, j, re, im], ...] }`.
/// Relative relation paths resolve against `base_dir`.
PatternMatrix pattern_matrix_from_json(const json &doc,
                                       const std::filesystem::path &base_dir = {});
json pattern_matrix_to_json(const PatternMatrix &b);

/// Same layout as a pattern matrix, listing only i <= j; the lower triangle
/// is filled by conjugation.
HermitianFunctional functional_from_json(const json &doc,
                                         const std::filesystem::path &base_dir = {});
json functional_to_json(const HermitianFunctional &phi);

} // namespace tolsys::io
