#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tolsys/linalg.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

/// Entry magnitude below which a product entry counts as structurally zero.
inline constexpr double kSupportZero = 1e-12;
/// Default relative PSD tolerance.
inline constexpr double kPsdTol = 1e-9;

/// Element of the operator system E(R): a complex matrix vanishing off R.
class PatternMatrix {
public:
  /// Throws InvariantError if `entries` is nonzero somewhere off the pattern.
  PatternMatrix(Relation relation, CMatrix entries);

  const Relation &relation() const { return relation_; }
  const CMatrix &entries() const { return entries_; }
  std::size_t size() const { return relation_.size(); }

private:
  Relation relation_;
  CMatrix entries_;
};

/// Entrywise product with the 0/1 matrix of `r` (the Schur projection S_L).
PatternMatrix schur_project(const Relation &r, const CMatrix &b);
/// Same, without wrapping.
CMatrix schur_mask(const Relation &r, const CMatrix &b);
/// Entrywise product with the complement pattern: b - S_L(b).
CMatrix off_pattern(const Relation &r, const CMatrix &b);
/// The 0/1 matrix L of `r`.
CMatrix indicator_matrix(const Relation &r);

/// min eigenvalue >= -tol * max(1, ||h||). Throws std::invalid_argument when
/// `h` is not hermitian within the same scaled tolerance.
bool is_psd(const CMatrix &h, double tol = kPsdTol);

/// All n^3 inequalities L_ij + L_jk - L_ik <= 1 on the 0/1 matrix.
bool is_equivalence_via_triangle(const Relation &r);

/// Generic element of E(r): independent uniform [-1, 1] real and imaginary
/// parts on the pattern.
PatternMatrix random_element(const Relation &r, Rng &rng);
/// Generic hermitian element of E(r).
CMatrix random_hermitian_element(const Relation &r, Rng &rng);

/// Nonzero pattern (|entry| > kSupportZero) of A B + B' A' accumulated over
/// `trials` independent draws A, A' in E(r1), B, B' in E(r2).
BoolMatrix product_span_support(const Relation &r1, const Relation &r2,
                                std::size_t trials, std::uint64_t seed);

/// Nonzero pattern of a single matrix.
BoolMatrix support_of(const CMatrix &m, double zero = kSupportZero);

struct AlgebraDegree {
  std::size_t degree;
  std::vector<std::size_t> blocks;
};

/// Support-level oracle for the propagation number: composes R with itself
/// until the pattern is closed under composition. `degree` is the first k
/// at which that happens; `blocks` are the class sizes of the closure.
AlgebraDegree generated_algebra_degree(const Relation &r);

/// k x k block matrix over E(R), assembled as one kn x kn matrix.
class MatrixLevelElement {
public:
  /// `blocks` is k x k, row-major; every block n x n and supported on `r`.
  MatrixLevelElement(Relation relation, std::size_t level,
                     const std::vector<CMatrix> &blocks);

  const Relation &relation() const { return relation_; }
  std::size_t level() const { return level_; }
  const CMatrix &assembled() const { return assembled_; }

private:
  Relation relation_;
  std::size_t level_;
  CMatrix assembled_;
};

/// Membership in M_k(E)_+ inherited from the ambient matrix algebra.
bool level_positive(const MatrixLevelElement &e, double tol = kPsdTol);

} // namespace tolsys
