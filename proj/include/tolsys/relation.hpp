#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tolsys {

/// Dense n x n boolean matrix, one bit per entry, rows padded to 64 bits.
/// Holds raw compositions, which need not be symmetric.
class BoolMatrix {
public:
  using Word = std::uint64_t;

  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const Word> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<Word> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

  bool is_symmetric() const;
  bool is_reflexive() const;
  std::size_t count() const;
  /// Entrywise `this <= other`.
  bool subset_of(const BoolMatrix &other) const;
  BoolMatrix transposed() const;

  BoolMatrix &operator|=(const BoolMatrix &other);
  friend bool operator==(const BoolMatrix &, const BoolMatrix &) = default;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Tolerance relation: reflexive, symmetric relation on {0, ..., n-1}.
/// Immutable once constructed.
class Relation {
public:
  /// Throws InvariantError unless `adj` is reflexive and symmetric.
  explicit Relation(BoolMatrix adj);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  /// Unordered pairs; loops are implicit. Throws InputError on a bad index.
  static Relation from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adj_.size(); }
  const BoolMatrix &adj() const { return adj_; }
  bool contains(std::size_t x, std::size_t y) const { return adj_(x, y); }

  /// Off-diagonal pairs (i < j).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool is_full() const;
  bool is_transitive() const;

  /// Induced relation on `subset`, re-indexed 0..|subset|-1 in the given order.
  Relation restricted_to(std::span<const std::size_t> subset) const;

  friend bool operator==(const Relation &, const Relation &) = default;

private:
  BoolMatrix adj_;
};

/// Boolean matrix product: (x, y) iff some z has r1(x, z) and r2(z, y).
BoolMatrix compose(const BoolMatrix &r1, const BoolMatrix &r2);
BoolMatrix compose_serial(const BoolMatrix &r1, const BoolMatrix &r2);
BoolMatrix compose(const Relation &r1, const Relation &r2);

/// r1 o r2 union r2 o r1.
Relation symmetrized_compose(const Relation &r1, const Relation &r2);

struct Closure {
  Relation relation;
  /// Equivalence classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes;
};

/// Smallest equivalence relation containing `r`.
Closure transitive_closure(const Relation &r);
std::vector<std::vector<std::size_t>> connected_components(const Relation &r);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Hop distances from `source`; kUnreachable where disconnected.
std::vector<std::size_t> bfs_distances(const Relation &r, std::size_t source);

/// Graph diameter, floored at 1 (a single point has diameter 1, matching the
/// propagation number of M_1). Empty optional when disconnected.
/// Band and circulant-band inputs take the closed-form path.
std::optional<std::size_t> diameter(const Relation &r);
/// All-pairs breadth-first search, parallel over sources.
std::optional<std::size_t> diameter_bfs(const Relation &r);
std::optional<std::size_t> diameter_bfs_serial(const Relation &r);

/// N if `r` equals {|i - j| <= N}, for some N >= 0.
std::optional<std::size_t> detect_band_width(const Relation &r);
/// N if `r` equals {min(|i - j|, n - |i - j|) <= N}, for some N >= 0.
std::optional<std::size_t> detect_circulant_band_width(const Relation &r);

/// ceil((p - 1) / N), floored at 1.
std::size_t band_diameter_closed_form(std::size_t p, std::size_t band);
/// ceil(floor(m / 2) / N), floored at 1.
std::size_t circulant_diameter_closed_form(std::size_t m, std::size_t band);

/// {|i - j| <= N}, any N >= 0, clipped at p - 1.
Relation band_pattern(std::size_t p, std::size_t band);
/// {min(|i - j|, m - |i - j|) <= N}, any N >= 0.
Relation circulant_pattern(std::size_t m, std::size_t band);

} // namespace tolsys
