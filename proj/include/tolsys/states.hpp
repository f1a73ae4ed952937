#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tolsys/linalg.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/relation.hpp"

namespace tolsys {

/// Hermitian functional on E(R), stored as its canonical representative
/// S_L(rho): a hermitian matrix supported on R. Pairs with b by tr(rep b);
/// every completion of rep gives the same value on E(R).
class HermitianFunctional {
public:
  /// Throws InvariantError if `rep` is not hermitian (1e-12 relative) or
  /// has entries off the pattern.
  HermitianFunctional(Relation relation, CMatrix rep);

  static HermitianFunctional zero(const Relation &r);

  const Relation &relation() const { return relation_; }
  const CMatrix &rep() const { return rep_; }
  std::size_t size() const { return relation_.size(); }

  Complex pairing(const CMatrix &b) const;
  double trace() const { return rep_.trace().real(); }

private:
  Relation relation_;
  CMatrix rep_;
};

/// Unit vector and its support {x : |v_x| > 1e-10 ||v||_inf}.
class VectorState {
public:
  /// Throws InvariantError unless | ||v|| - 1 | <= 1e-12.
  explicit VectorState(CVector v);
  /// Normalises; throws InvariantError on the zero vector.
  static VectorState normalized(const CVector &v);

  const CVector &vector() const { return v_; }
  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  const std::vector<std::size_t> &support() const { return support_; }

private:
  CVector v_;
  std::vector<std::size_t> support_;
};

// ------------------------------------------------------------ dual cone

/// rep = S_L(rho), optionally scaled to trace 1. Throws std::domain_error
/// when normalising a trace-zero projection.
HermitianFunctional functional_from_density(const Relation &r,
                                            const CMatrix &rho,
                                            bool normalize);

struct CompletionOptions {
  std::size_t max_iterations = 20000;
  /// Stop once successive iterates move less than this (Frobenius).
  double step_tol = 1e-10;
  /// Residual (distance between the PSD iterate and the affine set, relative
  /// to max(1, ||rep||_F)) at or below which the answer is positive ...
  double accept = 1e-6;
  /// ... and above which it is negative; in between is undetermined.
  double reject = 1e-4;
  /// Tolerance handed to is_psd when validating a certificate.
  double certificate_tol = 1e-8;
};

enum class Verdict { positive, not_positive, undetermined };

struct DualPositivity {
  Verdict verdict = Verdict::undetermined;
  /// A PSD completion M with S_L(M) = rep, when positive.
  std::optional<CMatrix> certificate;
  double residual = 0.0;
  std::size_t iterations = 0;

  bool answer() const { return verdict == Verdict::positive; }
  bool undetermined() const { return verdict == Verdict::undetermined; }
};

/// Does rep admit a PSD completion? Alternating projections with Dykstra's
/// correction between the PSD cone and {M : S_L(M) = rep}.
DualPositivity dual_positive(const HermitianFunctional &phi,
                             const CompletionOptions &opts = {});

/// `m` is PSD within `tol` and agrees with phi on the pattern within `tol`.
bool verify_certificate(const HermitianFunctional &phi, const CMatrix &m,
                        double tol);

/// Dykstra iteration from `start` toward the projection of `start` onto
/// {M >= 0 : S_L(M) = rep}.
struct CompletionRun {
  CMatrix psd;    // last PSD iterate
  CMatrix affine; // last affine iterate (agrees with rep on the pattern)
  double residual;
  std::size_t iterations;
};
CompletionRun dykstra_completion(const Relation &r, const CMatrix &rep,
                                 const CMatrix &start,
                                 const CompletionOptions &opts);

// ---------------------------------------------------------- dual norm

struct TraceNormOptions {
  /// Projected subgradient, step c / sqrt(k) with c = ||rep||_1.
  std::size_t subgradient_iterations = 5000;
  /// ADMM polish started from the best subgradient iterate.
  std::size_t admm_iterations = 20000;
  double admm_tol = 1e-12;
  /// Random unit-ball elements of E(R) tried for the lower bound.
  std::size_t lower_bound_samples = 10000;
  std::uint64_t seed = 0x5eed;
};

/// ||phi|| bracketed: `upper` is the trace norm of an explicit completion,
/// `lower` is |phi(b)| for an explicit b in the unit ball of E(R).
struct NormBracket {
  double upper = 0.0;
  double lower = 0.0;
  CMatrix completion; // S_L(completion) = rep, ||completion||_1 = upper
  CMatrix witness;    // hermitian, in E(R), ||witness|| <= 1
  double subgradient_value = 0.0;
};

NormBracket dual_norm_bracket(const HermitianFunctional &phi,
                              const TraceNormOptions &opts = {});
/// min over completions of the trace norm (the `upper` end of the bracket).
double dual_norm_hermitian(const HermitianFunctional &phi,
                           const TraceNormOptions &opts = {});

struct JordanDecomposition {
  HermitianFunctional plus;
  HermitianFunctional minus;
  /// ||phi|| as computed (trace norm of the completion used).
  double norm;
  /// Lower end of the bracket for ||phi||.
  double norm_lower;
  /// tr M_+ and tr M_- for the spectral split of that completion.
  double plus_trace;
  double minus_trace;
};

/// Spectral split of a minimal-trace-norm completion M = M_+ - M_-,
/// restricted back to E(R). Not unique; only phi = plus - minus and
/// norm additivity are guaranteed.
JordanDecomposition jordan_decompose(const HermitianFunctional &phi,
                                     const TraceNormOptions &opts = {});

// ---------------------------------------------------------- pure states

/// Restriction of |v><v| to E(R).
HermitianFunctional restrict_vector_state(const Relation &r,
                                          const VectorState &v);

/// Classes of the closure of R restricted to supp(v), in original indices.
std::vector<std::vector<std::size_t>>
support_classes(const Relation &r, const VectorState &v);

/// Restriction of R to supp(v) generates a single class.
bool is_pure_restricted(const Relation &r, const VectorState &v);

struct ExtremalityOptions {
  /// Propose the split of the support along closure classes.
  bool use_component_split = true;
  /// Random starts whose PSD completions are averaged to span the face.
  std::size_t face_starts = 4;
  /// Random directions tried inside the face.
  std::size_t face_directions = 6;
  /// Minimum ||sigma_1 - sigma_2||_F for a decomposition to count.
  double min_separation = 1e-4;
  double certificate_tol = 1e-8;
  std::uint64_t seed = 0xface;
  CompletionOptions completion{4000, 1e-12, 1e-6, 1e-4, 1e-8};
};

struct Decomposition {
  double weight; // t in rep = t sigma_1 + (1 - t) sigma_2
  HermitianFunctional first;
  HermitianFunctional second;
  CMatrix first_certificate;
  CMatrix second_certificate;
};

/// Searches for rep = t sigma_1 + (1 - t) sigma_2 with sigma_i distinct
/// states carrying verified PSD-completion certificates.
std::optional<Decomposition>
find_state_decomposition(const Relation &r, const VectorState &v,
                         const ExtremalityOptions &opts = {});

/// True iff no decomposition was found (the restricted state is extreme).
bool extremality_oracle(const Relation &r, const VectorState &v,
                        const ExtremalityOptions &opts = {});

// ------------------------------------------------------ numerical radius

/// |phi(H)| for H = [[0, b], [b*, 0]] and phi the vector quasi-state of a
/// top eigenvector of H on M_2(E). Equals ||b||.
double numerical_radius(const Relation &r, const PatternMatrix &b);

} // namespace tolsys
