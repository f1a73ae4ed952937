#include "tolsys/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tolsys/error.hpp"

namespace tolsys::io {

namespace {

json parse_json(std::string_view text, const std::string &what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw InputError(what + ": invalid JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

const json &field(const json &doc, const char *key, const std::string &where) {
  if (!doc.is_object()) {
    throw InputError(where + ": expected a JSON object");
  }
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::size_t as_index(const json &v, const std::string &where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError(where + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double as_real(const json &v, const std::string &where) {
  if (!v.is_number()) {
    throw InputError(where + ": expected a number");
  }
  return v.get<double>();
}

std::size_t read_n(const json &doc, const std::string &where) {
  const std::size_t n = as_index(field(doc, "n", where), where + ".n");
  if (n == 0) {
    throw InputError(where + ".n: must be >= 1");
  }
  return n;
}

Relation relation_ref(const json &ref, const std::filesystem::path &base_dir) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) {
      p = base_dir / p;
    }
    return load_relation(p);
  }
  return relation_from_json(ref);
}

CMatrix read_entries(const json &doc, std::size_t n, bool upper_only,
                     const std::string &what) {
  const json &entries = field(doc, "entries", what);
  if (!entries.is_array()) {
    throw InputError(what + ".entries: expected an array");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string at = what + ".entries[" + std::to_string(k) + "]";
    const json &e = entries[k];
    if (!e.is_array() || e.size() != 4) {
      throw InputError(at + ": expected [i, j, re, im]");
    }
    const std::size_t i = as_index(e[0], at + "[0]");
    const std::size_t j = as_index(e[1], at + "[1]");
    if (i >= n || j >= n) {
      throw InputError(at + ": index out of range [0," + std::to_string(n) + ")");
    }
    if (upper_only && i > j) {
      throw InputError(at + ": functional entries must have i <= j");
    }
    const Complex z(as_real(e[2], at + "[2]"), as_real(e[3], at + "[3]"));
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    if (upper_only) {
      if (i == j && z.imag() != 0.0) {
        throw InvariantError(at + ": diagonal of a hermitian functional must be real");
      }
      m(ii, jj) = z;
      m(jj, ii) = std::conj(z);
    } else {
      m(ii, jj) = z;
    }
  }
  return m;
}

json entries_json(const CMatrix &m, bool upper_only) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = upper_only ? i : 0; j < m.cols(); ++j) {
      if (m(i, j) != Complex(0.0, 0.0)) {
        out.push_back({i, j, m(i, j).real(), m(i, j).imag()});
      }
    }
  }
  return out;
}

} // namespace

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- relation

Relation relation_from_json(const json &doc) {
  const std::size_t n = read_n(doc, "relation");
  if (doc.contains("adj")) {
    const json &adj = doc["adj"];
    if (!adj.is_array() || adj.size() != n) {
      throw InputError("relation.adj: expected " + std::to_string(n) + " rows");
    }
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      const json &row = adj[i];
      if (!row.is_array() || row.size() != n) {
        throw InputError("relation.adj[" + std::to_string(i) + "]: expected " +
                         std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const json &v = row[j];
        const std::string at = "relation.adj[" + std::to_string(i) + "][" +
                               std::to_string(j) + "]";
        if (v.is_boolean()) {
          m.set(i, j, v.get<bool>());
        } else if (v.is_number_integer() &&
                   (v.get<std::int64_t>() == 0 || v.get<std::int64_t>() == 1)) {
          m.set(i, j, v.get<std::int64_t>() == 1);
        } else {
          throw InputError(at + ": expected 0, 1, true or false");
        }
      }
    }
    return Relation(std::move(m));
  }
  const json &edges = field(doc, "edges", "relation");
  if (!edges.is_array()) {
    throw InputError("relation.edges: expected an array");
  }
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string at = "relation.edges[" + std::to_string(k) + "]";
    const json &e = edges[k];
    if (!e.is_array() || e.size() != 2) {
      throw InputError(at + ": expected [i, j]");
    }
    const std::size_t a = as_index(e[0], at + "[0]");
    const std::size_t b = as_index(e[1], at + "[1]");
    if (a >= n || b >= n) {
      throw InputError(at + ": index out of range [0," + std::to_string(n) + ")");
    }
    list.emplace_back(a, b);
  }
  return Relation::from_edges(n, list);
}

Relation parse_relation(std::string_view text) {
  return relation_from_json(parse_json(text, "relation"));
}

Relation load_relation(const std::filesystem::path &path) {
  return parse_relation(read_file(path));
}

json relation_to_json(const Relation &r) {
  json edges = json::array();
  for (auto [a, b] : r.edges()) {
    edges.push_back({a, b});
  }
  return {{"n", r.size()}, {"edges", std::move(edges)}};
}

// ------------------------------------------------------------------ metric

FiniteMetric parse_metric_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      continue;
    }
    std::vector<double> row;
    std::size_t col = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view cell = line.substr(
          start, comma == std::string_view::npos ? line.size() - start
                                                 : comma - start);
      ++col;
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
        cell.remove_prefix(1);
      }
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) {
        cell.remove_suffix(1);
      }
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw InputError("metric line " + std::to_string(line_no) + ", column " +
                         std::to_string(col) + ": not a number: '" +
                         std::string(cell) + "'");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) {
    throw InputError("metric: empty file");
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("metric row " + std::to_string(i + 1) + ": expected " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(rows[i].size()));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteMetric(n, std::move(flat));
}

FiniteMetric load_metric_csv(const std::filesystem::path &path) {
  return parse_metric_csv(read_file(path));
}

std::string metric_to_csv(const FiniteMetric &m) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m(i, j));
      (void)ec;
      if (j > 0) {
        out += ',';
      }
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------- weighted graph

WeightedGraph weighted_graph_from_json(const json &doc) {
  WeightedGraph g{read_n(doc, "graph"), {}};
  const json &edges = field(doc, "edges", "graph");
  if (!edges.is_array()) {
    throw InputError("graph.edges: expected an array");
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string at = "graph.edges[" + std::to_string(k) + "]";
    const json &e = edges[k];
    if (!e.is_array() || e.size() != 3) {
      throw InputError(at + ": expected [i, j, length]");
    }
    const std::size_t a = as_index(e[0], at + "[0]");
    const std::size_t b = as_index(e[1], at + "[1]");
    if (a >= g.n || b >= g.n) {
      throw InputError(at + ": index out of range [0," + std::to_string(g.n) + ")");
    }
    g.edges.push_back({a, b, as_real(e[2], at + "[2]")});
  }
  return g;
}

WeightedGraph load_weighted_graph(const std::filesystem::path &path) {
  return weighted_graph_from_json(parse_json(read_file(path), path.string()));
}

// ------------------------------------------------------------------ vector

VectorState vector_from_json(const json &doc) {
  const json &v = field(doc, "v", "vector");
  if (!v.is_array() || v.empty()) {
    throw InputError("vector.v: expected a nonempty array");
  }
  CVector x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = "vector.v[" + std::to_string(k) + "]";
    const json &e = v[k];
    Complex z;
    if (e.is_number()) {
      z = Complex(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      z = Complex(as_real(e[0], at + "[0]"), as_real(e[1], at + "[1]"));
    } else {
      throw InputError(at + ": expected a number or [re, im]");
    }
    x(static_cast<Eigen::Index>(k)) = z;
  }
  return VectorState::normalized(x);
}

VectorState load_vector(const std::filesystem::path &path) {
  return vector_from_json(parse_json(read_file(path), path.string()));
}

// ----------------------------------------------------- pattern / functional

PatternMatrix pattern_matrix_from_json(const json &doc,
                                       const std::filesystem::path &base_dir) {
  Relation r = relation_ref(field(doc, "relation", "pattern"), base_dir);
  CMatrix m = read_entries(doc, r.size(), false, "pattern");
  return PatternMatrix(std::move(r), std::move(m));
}

json pattern_matrix_to_json(const PatternMatrix &b) {
  return {{"relation", relation_to_json(b.relation())},
          {"entries", entries_json(b.entries(), false)}};
}

HermitianFunctional functional_from_json(const json &doc,
                                         const std::filesystem::path &base_dir) {
  Relation r = relation_ref(field(doc, "relation", "functional"), base_dir);
  CMatrix m = read_entries(doc, r.size(), true, "functional");
  return HermitianFunctional(std::move(r), std::move(m));
}

json functional_to_json(const HermitianFunctional &phi) {
  return {{"relation", relation_to_json(phi.relation())},
          {"entries", entries_json(phi.rep(), true)}};
}

} // namespace tolsys::io
