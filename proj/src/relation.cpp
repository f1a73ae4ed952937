#include "tolsys/relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "tolsys/error.hpp"
#include "tolsys/parallel.hpp"

namespace tolsys {

// ---------------------------------------------------------------- BoolMatrix

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  Word &w = bits_[i * words_ + j / 64];
  const Word mask = Word{1} << (j % 64);
  w = value ? (w | mask) : (w & ~mask);
}

bool BoolMatrix::is_symmetric() const { return *this == transposed(); }

bool BoolMatrix::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(*this)(i, i)) {
      return false;
    }
  }
  return true;
}

std::size_t BoolMatrix::count() const {
  std::size_t c = 0;
  for (Word w : bits_) {
    c += static_cast<std::size_t>(std::popcount(w));
  }
  return c;
}

bool BoolMatrix::subset_of(const BoolMatrix &other) const {
  if (n_ != other.n_) {
    throw DimensionError("subset_of: size mismatch");
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if ((bits_[k] & ~other.bits_[k]) != 0) {
      return false;
    }
  }
  return true;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j)) {
        t.set(j, i);
      }
    }
  }
  return t;
}

BoolMatrix &BoolMatrix::operator|=(const BoolMatrix &other) {
  if (n_ != other.n_) {
    throw DimensionError("union: size mismatch");
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    bits_[k] |= other.bits_[k];
  }
  return *this;
}

// ------------------------------------------------------------------ Relation

Relation::Relation(BoolMatrix adj) : adj_(std::move(adj)) {
  const std::size_t n = adj_.size();
  if (n == 0) {
    throw InvariantError("relation must have at least one point");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!adj_(i, i)) {
      throw InvariantError("relation not reflexive at (" + std::to_string(i) +
                           "," + std::to_string(i) + ")");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj_(i, j) != adj_(j, i)) {
        throw InvariantError("relation not symmetric at (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ")");
      }
    }
  }
}

Relation Relation::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return Relation(std::move(m));
}

Relation Relation::full(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, j);
    }
  }
  return Relation(std::move(m));
}

Relation Relation::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw InputError("relation must have n >= 1");
  }
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    if (a >= n || b >= n) {
      throw InputError("edge " + std::to_string(k) + " index out of range [0," +
                       std::to_string(n) + ")");
    }
    m.set(a, b);
    m.set(b, a);
  }
  return Relation(std::move(m));
}

std::vector<Edge> Relation::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adj_(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t Relation::edge_count() const { return (adj_.count() - size()) / 2; }

bool Relation::is_full() const { return adj_.count() == size() * size(); }

bool Relation::is_transitive() const { return compose(adj_, adj_) == adj_; }

Relation Relation::restricted_to(std::span<const std::size_t> subset) const {
  BoolMatrix m(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      if (subset[a] >= size() || subset[b] >= size()) {
        throw DimensionError("restricted_to: index out of range");
      }
      if (adj_(subset[a], subset[b])) {
        m.set(a, b);
      }
    }
  }
  return Relation(std::move(m));
}

// --------------------------------------------------------------- composition

namespace {

void compose_row(const BoolMatrix &r1, const BoolMatrix &r2, BoolMatrix &out,
                 std::size_t x) {
  auto dst = out.row(x);
  auto src = r1.row(x);
  for (std::size_t w = 0; w < src.size(); ++w) {
    BoolMatrix::Word bits = src[w];
    while (bits != 0) {
      const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      auto via = r2.row(z);
      for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] |= via[k];
      }
    }
  }
}

void check_same_size(const BoolMatrix &a, const BoolMatrix &b) {
  if (a.size() != b.size()) {
    throw DimensionError("composition of relations on " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " points");
  }
}

} // namespace

BoolMatrix compose(const BoolMatrix &r1, const BoolMatrix &r2) {
  check_same_size(r1, r2);
  BoolMatrix out(r1.size());
  par::for_each_index(r1.size(),
                      [&](std::size_t x) { compose_row(r1, r2, out, x); });
  return out;
}

BoolMatrix compose_serial(const BoolMatrix &r1, const BoolMatrix &r2) {
  check_same_size(r1, r2);
  BoolMatrix out(r1.size());
  for (std::size_t x = 0; x < r1.size(); ++x) {
    compose_row(r1, r2, out, x);
  }
  return out;
}

BoolMatrix compose(const Relation &r1, const Relation &r2) {
  return compose(r1.adj(), r2.adj());
}

Relation symmetrized_compose(const Relation &r1, const Relation &r2) {
  BoolMatrix m = compose(r1.adj(), r2.adj());
  if (!(r1 == r2)) {
    m |= compose(r2.adj(), r1.adj());
  }
  return Relation(std::move(m));
}

// -------------------------------------------------------------- connectivity

std::vector<std::vector<std::size_t>> connected_components(const Relation &r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> label(n, kUnreachable);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kUnreachable) {
      continue;
    }
    const std::size_t id = classes.size();
    classes.emplace_back();
    std::vector<std::size_t> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      classes[id].push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] == kUnreachable && r.contains(u, v)) {
          label[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end());
  }
  return classes;
}

Closure transitive_closure(const Relation &r) {
  auto classes = connected_components(r);
  BoolMatrix m(r.size());
  for (const auto &c : classes) {
    for (std::size_t a : c) {
      for (std::size_t b : c) {
        m.set(a, b);
      }
    }
  }
  return Closure{Relation(std::move(m)), std::move(classes)};
}

// ------------------------------------------------------------------ diameter

std::vector<std::size_t> bfs_distances(const Relation &r, std::size_t source) {
  const std::size_t n = r.size();
  const std::size_t words = r.adj().words_per_row();
  std::vector<std::size_t> dist(n, kUnreachable);
  std::vector<BoolMatrix::Word> visited(words, 0), next(words, 0);
  std::vector<std::size_t> frontier{source};
  dist[source] = 0;
  visited[source / 64] |= BoolMatrix::Word{1} << (source % 64);
  std::size_t level = 0;
  while (!frontier.empty()) {
    ++level;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t u : frontier) {
      auto row = r.adj().row(u);
      for (std::size_t k = 0; k < words; ++k) {
        next[k] |= row[k];
      }
    }
    frontier.clear();
    for (std::size_t k = 0; k < words; ++k) {
      BoolMatrix::Word fresh = next[k] & ~visited[k];
      visited[k] |= fresh;
      while (fresh != 0) {
        const std::size_t v = k * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        dist[v] = level;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

// Eccentricity of `source`; kUnreachable if some vertex is not reached.
std::size_t eccentricity(const Relation &r, std::size_t source) {
  auto dist = bfs_distances(r, source);
  return *std::max_element(dist.begin(), dist.end());
}

} // namespace

std::optional<std::size_t> diameter_bfs(const Relation &r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> ecc(n);
  par::for_each_index(n, [&](std::size_t s) { ecc[s] = eccentricity(r, s); });
  const std::size_t d = *std::max_element(ecc.begin(), ecc.end());
  if (d == kUnreachable) {
    return std::nullopt;
  }
  return std::max<std::size_t>(d, 1);
}

std::optional<std::size_t> diameter_bfs_serial(const Relation &r) {
  std::size_t d = 0;
  for (std::size_t s = 0; s < r.size(); ++s) {
    d = std::max(d, eccentricity(r, s));
    if (d == kUnreachable) {
      return std::nullopt;
    }
  }
  return std::max<std::size_t>(d, 1);
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t cyclic_gap(std::size_t i, std::size_t j, std::size_t m) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, m - d);
}

template <typename Gap>
std::optional<std::size_t> detect_width(const Relation &r, Gap gap) {
  const std::size_t n = r.size();
  // Candidate width from row 0, then confirm every entry.
  std::size_t width = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (r.contains(0, j)) {
      width = std::max(width, gap(0, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r.contains(i, j) != (gap(i, j) <= width)) {
        return std::nullopt;
      }
    }
  }
  return width;
}

} // namespace

std::optional<std::size_t> detect_band_width(const Relation &r) {
  return detect_width(r, [](std::size_t i, std::size_t j) {
    return i > j ? i - j : j - i;
  });
}

std::optional<std::size_t> detect_circulant_band_width(const Relation &r) {
  const std::size_t m = r.size();
  return detect_width(
      r, [m](std::size_t i, std::size_t j) { return cyclic_gap(i, j, m); });
}

std::size_t band_diameter_closed_form(std::size_t p, std::size_t band) {
  if (p <= 1) {
    return 1;
  }
  return std::max<std::size_t>(1, ceil_div(p - 1, band));
}

std::size_t circulant_diameter_closed_form(std::size_t m, std::size_t band) {
  if (m <= 1) {
    return 1;
  }
  return std::max<std::size_t>(1, ceil_div(m / 2, band));
}

std::optional<std::size_t> diameter(const Relation &r) {
  const std::size_t n = r.size();
  if (n == 1 || r.is_full()) {
    return 1;
  }
  if (auto band = detect_band_width(r)) {
    if (*band == 0) {
      return std::nullopt;
    }
    return band_diameter_closed_form(n, *band);
  }
  if (auto band = detect_circulant_band_width(r)) {
    if (*band == 0) {
      return std::nullopt;
    }
    return circulant_diameter_closed_form(n, *band);
  }
  return diameter_bfs(r);
}

Relation band_pattern(std::size_t p, std::size_t band) {
  BoolMatrix m(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if ((i > j ? i - j : j - i) <= band) {
        m.set(i, j);
      }
    }
  }
  return Relation(std::move(m));
}

Relation circulant_pattern(std::size_t m, std::size_t band) {
  BoolMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (cyclic_gap(i, j, m) <= band) {
        a.set(i, j);
      }
    }
  }
  return Relation(std::move(a));
}

} // namespace tolsys
