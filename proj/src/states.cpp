#include "tolsys/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/LevenbergMarquardt>

#include "tolsys/error.hpp"

namespace tolsys {

namespace {

using Index = Eigen::Index;

double frob_scale(const CMatrix &m) { return std::max(1.0, m.norm()); }

// Sum of |eigenvalues| and the sign matrix of a hermitian matrix.
struct SignInfo {
  double trace_norm;
  CMatrix sign;
};

SignInfo sign_info(const CMatrix &h) {
  auto [values, vectors] = hermitian_eigen(h);
  RVector s(values.size());
  for (Index i = 0; i < values.size(); ++i) {
    s(i) = values(i) > 0 ? 1.0 : (values(i) < 0 ? -1.0 : 0.0);
  }
  return {values.cwiseAbs().sum(), vectors * s.asDiagonal() * vectors.adjoint()};
}

// Eigenvalue soft-thresholding: prox of tau * trace norm at a hermitian h.
CMatrix shrink_spectrum(const CMatrix &h, double tau) {
  auto [values, vectors] = hermitian_eigen(h);
  RVector s(values.size());
  for (Index i = 0; i < values.size(); ++i) {
    const double mag = std::max(std::abs(values(i)) - tau, 0.0);
    s(i) = values(i) >= 0 ? mag : -mag;
  }
  return vectors * s.asDiagonal() * vectors.adjoint();
}

double abs_spectral_radius(const CMatrix &h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Overwrites the pattern entries of `m` with those of `rep`.
CMatrix with_pattern(const Relation &r, const CMatrix &m, const CMatrix &rep) {
  return off_pattern(r, m) + rep;
}

} // namespace

// ------------------------------------------------------ HermitianFunctional

HermitianFunctional::HermitianFunctional(Relation relation, CMatrix rep)
    : relation_(std::move(relation)), rep_(std::move(rep)) {
  // Support and shape.
  PatternMatrix checked(relation_, rep_);
  if (hermitian_defect(rep_) > 1e-12 * frob_scale(rep_)) {
    throw InvariantError("functional representative is not hermitian");
  }
}

HermitianFunctional HermitianFunctional::zero(const Relation &r) {
  const auto n = static_cast<Index>(r.size());
  return HermitianFunctional(r, CMatrix::Zero(n, n));
}

Complex HermitianFunctional::pairing(const CMatrix &b) const {
  if (b.rows() != rep_.rows() || b.cols() != rep_.cols()) {
    throw DimensionError("pairing: size mismatch");
  }
  // tr(rep b) = sum_ij rep_ij b_ji
  return (rep_.array() * b.transpose().array()).sum();
}

// -------------------------------------------------------------- VectorState

VectorState::VectorState(CVector v) : v_(std::move(v)) {
  if (v_.size() == 0) {
    throw InvariantError("vector state needs at least one component");
  }
  if (std::abs(v_.norm() - 1.0) > 1e-12) {
    throw InvariantError("vector state is not a unit vector (norm " +
                         std::to_string(v_.norm()) + ")");
  }
  const double cut = 1e-10 * v_.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v_.size(); ++i) {
    if (std::abs(v_(i)) > cut) {
      support_.push_back(static_cast<std::size_t>(i));
    }
  }
}

VectorState VectorState::normalized(const CVector &v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvariantError("cannot normalise a zero vector");
  }
  return VectorState(v / norm);
}

// ------------------------------------------------------------- dual cone

HermitianFunctional functional_from_density(const Relation &r,
                                            const CMatrix &rho,
                                            bool normalize) {
  if (hermitian_defect(rho) > 1e-12 * frob_scale(rho)) {
    throw std::invalid_argument("density matrix is not hermitian");
  }
  CMatrix rep = schur_mask(r, hermitian_part(rho));
  if (normalize) {
    const double tr = rep.trace().real();
    if (std::abs(tr) <= 1e-300) {
      throw std::domain_error("cannot normalise: trace of S_L(rho) is zero");
    }
    rep /= tr;
  }
  return HermitianFunctional(r, std::move(rep));
}

bool verify_certificate(const HermitianFunctional &phi, const CMatrix &m,
                        double tol) {
  if (m.rows() != phi.rep().rows() || m.cols() != phi.rep().cols()) {
    return false;
  }
  const double scale = std::max(1.0, operator_norm(m));
  if (hermitian_defect(m) > tol * scale) {
    return false;
  }
  const CMatrix gap = schur_mask(phi.relation(), m) - phi.rep();
  if (gap.size() > 0 && gap.cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  return is_psd(hermitian_part(m), tol);
}

CompletionRun dykstra_completion(const Relation &r, const CMatrix &rep,
                                 const CMatrix &start,
                                 const CompletionOptions &opts) {
  const double scale = frob_scale(rep);
  CMatrix x = hermitian_part(start);
  CMatrix correction = CMatrix::Zero(x.rows(), x.cols());
  CMatrix y = x;
  double residual = 0.0;
  std::size_t it = 0;
  while (it < opts.max_iterations) {
    ++it;
    y = project_psd(x + correction);
    correction = x + correction - y;
    // The affine projection ignores pattern entries of its argument, so
    // Dykstra's second correction term never changes the iterate.
    CMatrix next = with_pattern(r, y, rep);
    const double step = (next - x).norm();
    x = std::move(next);
    residual = (y - x).norm() / scale;
    if (step < opts.step_tol) {
      break;
    }
  }
  return {y, x, residual, it};
}

namespace {

std::optional<CMatrix> factored_completion(const Relation &r, const CMatrix &rep,
                                           const HermitianEigen &start, Index k);

// Unknowns in the factored fit are 2 n k reals with a dense Jacobian.
constexpr Index kMaxFactorUnknowns = 2048;

// Rounds a stalled Dykstra iterate to an exact low-rank completion.
std::optional<CMatrix> polish_completion(const Relation &r, const CMatrix &rep,
                                         CMatrix start) {
  const Index n = rep.rows();
  for (Index i = 0; i < n; ++i) {
    if (rep(i, i).real() <= 0.0) {
      start.row(i).setZero();
      start.col(i).setZero();
    }
  }
  const HermitianEigen spectrum = hermitian_eigen(hermitian_part(start));
  const double top = spectrum.values.maxCoeff();
  if (!(top > 0.0)) {
    return std::nullopt;
  }
  Index rank = 0;
  for (Index i = 0; i < n; ++i) {
    rank += spectrum.values(i) > 1e-6 * top ? 1 : 0;
  }
  for (Index k = std::min(rank, kMaxFactorUnknowns / (2 * n)); k >= 1; --k) {
    if (auto v = factored_completion(r, rep, spectrum, k)) {
      return CMatrix(*v * v->adjoint());
    }
  }
  return std::nullopt;
}

} // namespace

DualPositivity dual_positive(const HermitianFunctional &phi,
                             const CompletionOptions &opts) {
  const CMatrix &rep = phi.rep();
  const auto n = rep.rows();
  DualPositivity out;
  if (is_psd(rep, opts.certificate_tol)) {
    out.verdict = Verdict::positive;
    out.certificate = rep;
    return out;
  }
  // Every completion shares the pattern entries, so negative diagonal
  // entries or violated 2x2 minors on the pattern rule out positivity.
  const double tol = opts.certificate_tol * frob_scale(rep);
  for (Index i = 0; i < n; ++i) {
    const double d = rep(i, i).real();
    if (d < -tol) {
      out.verdict = Verdict::not_positive;
      out.residual = -d;
      return out;
    }
    for (Index j = i + 1; j < n; ++j) {
      const double gap = std::norm(rep(i, j)) - d * rep(j, j).real();
      if (gap > tol) {
        out.verdict = Verdict::not_positive;
        out.residual = gap;
        return out;
      }
    }
  }
  const CompletionRun run =
      dykstra_completion(phi.relation(), rep, rep, opts);
  out.residual = run.residual;
  out.iterations = run.iterations;
  if (verify_certificate(phi, run.affine, opts.certificate_tol)) {
    out.verdict = Verdict::positive;
    out.certificate = run.affine;
    return out;
  }
  if (auto exact = polish_completion(phi.relation(), rep, run.psd);
      exact && verify_certificate(phi, *exact, opts.certificate_tol)) {
    out.verdict = Verdict::positive;
    out.certificate = std::move(exact);
  } else if (run.residual <= opts.reject) {
    // Close to the cone but no certificate at the requested tolerance.
    out.verdict = Verdict::undetermined;
  } else {
    out.verdict = Verdict::not_positive;
  }
  return out;
}

// ------------------------------------------------------------- dual norm

NormBracket dual_norm_bracket(const HermitianFunctional &phi,
                              const TraceNormOptions &opts) {
  const Relation &r = phi.relation();
  const CMatrix &rep = phi.rep();
  const auto n = rep.rows();
  NormBracket out;
  const double c = trace_norm(rep);
  if (c == 0.0) {
    out.completion = CMatrix::Zero(n, n);
    out.witness = CMatrix::Zero(n, n);
    return out;
  }

  // Projected subgradient on the free (off-pattern) entries.
  CMatrix m = rep;
  CMatrix best = rep;
  double best_value = c;
  for (std::size_t k = 1; k <= opts.subgradient_iterations; ++k) {
    const SignInfo info = sign_info(m);
    if (info.trace_norm < best_value) {
      best_value = info.trace_norm;
      best = m;
    }
    const CMatrix g = off_pattern(r, info.sign);
    const double gnorm = g.norm();
    if (gnorm < 1e-14) {
      break;
    }
    m = hermitian_part(m - (c / std::sqrt(static_cast<double>(k))) * g / gnorm);
  }
  out.subgradient_value = best_value;

  // ADMM polish: min ||X||_1 s.t. X = Z, S_L(Z) = rep. The scaled dual
  // variable stays on the pattern; rho * U converges to a dual witness.
  CMatrix z = best;
  CMatrix u = CMatrix::Zero(n, n);
  double rho = static_cast<double>(n) / c;
  const double tol = opts.admm_tol * std::max(1.0, c);
  for (std::size_t k = 1; k <= opts.admm_iterations; ++k) {
    const CMatrix x = shrink_spectrum(z - u, 1.0 / rho);
    CMatrix z_next = with_pattern(r, hermitian_part(x + u), rep);
    u += x - z_next;
    const double primal = (x - z_next).norm();
    const double dual = rho * (z_next - z).norm();
    z = std::move(z_next);
    if (primal < tol && dual < tol) {
      break;
    }
    if (k % 10 == 0) {
      if (primal > 10.0 * dual) {
        rho *= 2.0;
        u /= 2.0;
      } else if (dual > 10.0 * primal) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }
  const double admm_value = sign_info(z).trace_norm;
  if (admm_value < best_value) {
    out.upper = admm_value;
    out.completion = z;
  } else {
    out.upper = best_value;
    out.completion = best;
  }

  // Lower bound: |phi(b)| / ||b|| over explicit elements of E(R)_h.
  auto value_of = [&](const CMatrix &b) {
    const double nb = abs_spectral_radius(b);
    return nb > 0.0 ? std::abs(phi.pairing(b)) / nb : 0.0;
  };
  CMatrix incumbent = hermitian_part(schur_mask(r, rho * u));
  double lower = value_of(incumbent);
  {
    const CMatrix s = hermitian_part(schur_mask(r, sign_info(out.completion).sign));
    const double v = value_of(s);
    if (v > lower) {
      lower = v;
      incumbent = s;
    }
  }
  Rng rng(opts.seed);
  const double base = std::max(abs_spectral_radius(incumbent), 1e-300);
  for (std::size_t s = 0; s < opts.lower_bound_samples; ++s) {
    CMatrix b = random_hermitian_element(r, rng);
    if (s % 2 == 1 && lower > 0.0) {
      // Local sample around the incumbent with a shrinking radius.
      const double radius =
          0.1 * (1.0 - static_cast<double>(s) /
                           static_cast<double>(opts.lower_bound_samples));
      b = incumbent / base + radius * b;
    }
    const double v = value_of(b);
    if (v > lower) {
      lower = v;
      incumbent = b / abs_spectral_radius(b);
    }
  }
  out.lower = lower;
  out.witness = incumbent / std::max(abs_spectral_radius(incumbent), 1e-300);
  return out;
}

double dual_norm_hermitian(const HermitianFunctional &phi,
                           const TraceNormOptions &opts) {
  return dual_norm_bracket(phi, opts).upper;
}

JordanDecomposition jordan_decompose(const HermitianFunctional &phi,
                                     const TraceNormOptions &opts) {
  const Relation &r = phi.relation();
  NormBracket bracket = dual_norm_bracket(phi, opts);
  const SpectralSplit split = spectral_split(bracket.completion);
  CMatrix plus = hermitian_part(schur_mask(r, split.plus));
  // minus is pinned to plus - rep so that phi = plus - minus holds exactly.
  CMatrix minus = hermitian_part(plus - phi.rep());
  return JordanDecomposition{
      HermitianFunctional(r, std::move(plus)),
      HermitianFunctional(r, std::move(minus)),
      bracket.upper,
      bracket.lower,
      split.plus.trace().real(),
      split.minus.trace().real(),
  };
}

// ----------------------------------------------------------- pure states

HermitianFunctional restrict_vector_state(const Relation &r,
                                          const VectorState &v) {
  if (v.size() != r.size()) {
    throw DimensionError("vector and relation sizes differ");
  }
  const CVector &x = v.vector();
  return functional_from_density(r, x * x.adjoint(), false);
}

std::vector<std::vector<std::size_t>>
support_classes(const Relation &r, const VectorState &v) {
  if (v.size() != r.size()) {
    throw DimensionError("vector and relation sizes differ");
  }
  const auto &support = v.support();
  const Relation local = r.restricted_to(support);
  std::vector<std::vector<std::size_t>> classes;
  for (const auto &c : connected_components(local)) {
    std::vector<std::size_t> mapped;
    for (std::size_t k : c) {
      mapped.push_back(support[k]);
    }
    classes.push_back(std::move(mapped));
  }
  return classes;
}

bool is_pure_restricted(const Relation &r, const VectorState &v) {
  return support_classes(r, v).size() == 1;
}

namespace {

std::optional<Decomposition>
check_decomposition(const HermitianFunctional &phi, double weight,
                    const CMatrix &first, const CMatrix &second,
                    const CMatrix &first_cert, const CMatrix &second_cert,
                    const ExtremalityOptions &opts) {
  const Relation &r = phi.relation();
  const CMatrix a = hermitian_part(schur_mask(r, first));
  const CMatrix b = hermitian_part(schur_mask(r, second));
  if (!(weight > 0.0 && weight < 1.0)) {
    return std::nullopt;
  }
  if ((a - b).norm() < opts.min_separation * frob_scale(phi.rep())) {
    return std::nullopt;
  }
  if (std::abs(a.trace().real() - 1.0) > 1e-9 ||
      std::abs(b.trace().real() - 1.0) > 1e-9) {
    return std::nullopt;
  }
  const CMatrix mix = weight * a + (1.0 - weight) * b - phi.rep();
  if (mix.cwiseAbs().maxCoeff() > 1e-12) {
    return std::nullopt;
  }
  HermitianFunctional sa(r, a);
  HermitianFunctional sb(r, b);
  if (!verify_certificate(sa, first_cert, opts.certificate_tol) ||
      !verify_certificate(sb, second_cert, opts.certificate_tol)) {
    return std::nullopt;
  }
  return Decomposition{weight, std::move(sa), std::move(sb), first_cert,
                       second_cert};
}

std::optional<Decomposition> split_by_classes(const Relation &r,
                                              const VectorState &v,
                                              const HermitianFunctional &phi,
                                              const ExtremalityOptions &opts) {
  const auto classes = support_classes(r, v);
  if (classes.size() < 2) {
    return std::nullopt;
  }
  const CVector &x = v.vector();
  CVector head = CVector::Zero(x.size());
  for (std::size_t k : classes.front()) {
    head(static_cast<Index>(k)) = x(static_cast<Index>(k));
  }
  const CVector tail = x - head;
  const double weight = head.squaredNorm();
  const CVector hu = head / head.norm();
  const CVector tu = tail / tail.norm();
  const CMatrix hc = hu * hu.adjoint();
  const CMatrix tc = tu * tu.adjoint();
  return check_decomposition(phi, weight, hc, tc, hc, tc, opts);
}

// Residuals of S_L(V V*) = rep over the pattern pairs i <= j, with V an
// n x k complex factor packed as [Re V, Im V] (column-major).
struct FactorFit : Eigen::DenseFunctor<double> {
  FactorFit(const CMatrix &rep, Index k, std::vector<Edge> pairs, int inputs,
            int values)
      : Eigen::DenseFunctor<double>(inputs, values), rep(rep), n(rep.rows()),
        k(k), pairs(std::move(pairs)) {}

  const CMatrix &rep;
  Index n;
  Index k;
  std::vector<Edge> pairs;

  double re(const InputType &x, Index i, Index c) const { return x(c * n + i); }
  double im(const InputType &x, Index i, Index c) const {
    return x(n * k + c * n + i);
  }

  int operator()(const InputType &x, ValueType &f) const {
    f.setZero();
    Index row = 0;
    for (auto [a, b] : pairs) {
      const auto i = static_cast<Index>(a);
      const auto j = static_cast<Index>(b);
      double sr = 0.0;
      double si = 0.0;
      for (Index c = 0; c < k; ++c) {
        sr += re(x, i, c) * re(x, j, c) + im(x, i, c) * im(x, j, c);
        si += im(x, i, c) * re(x, j, c) - re(x, i, c) * im(x, j, c);
      }
      f(row++) = sr - rep(i, j).real();
      if (i != j) {
        f(row++) = si - rep(i, j).imag();
      }
    }
    return 0;
  }

  int df(const InputType &x, JacobianType &jac) const {
    jac.setZero();
    const Index off = n * k;
    Index row = 0;
    for (auto [a, b] : pairs) {
      const auto i = static_cast<Index>(a);
      const auto j = static_cast<Index>(b);
      for (Index c = 0; c < k; ++c) {
        jac(row, c * n + i) += re(x, j, c);
        jac(row, c * n + j) += re(x, i, c);
        jac(row, off + c * n + i) += im(x, j, c);
        jac(row, off + c * n + j) += im(x, i, c);
      }
      ++row;
      if (i != j) {
        for (Index c = 0; c < k; ++c) {
          jac(row, off + c * n + i) += re(x, j, c);
          jac(row, c * n + j) += im(x, i, c);
          jac(row, c * n + i) -= im(x, j, c);
          jac(row, off + c * n + j) -= re(x, i, c);
        }
        ++row;
      }
    }
    return 0;
  }
};

// Polishes a rough completion into an exact factored one, V V* with
// S_L(V V*) = rep to rounding, V of rank k seeded by the top k eigenpairs.
std::optional<CMatrix> factored_completion(const Relation &r,
                                           const CMatrix &rep,
                                           const HermitianEigen &start,
                                           Index k) {
  const RVector &values = start.values;
  const CMatrix &vectors = start.vectors;
  const Index n = rep.rows();
  std::vector<Index> keep;
  for (Index i = n - k; i < n; ++i) {
    keep.push_back(i);
  }
  std::vector<Edge> pairs;
  int residuals = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i; j < r.size(); ++j) {
      if (r.contains(i, j)) {
        pairs.emplace_back(i, j);
        residuals += i == j ? 1 : 2;
      }
    }
  }
  const int inputs = static_cast<int>(2 * n * k);
  // The solver wants at least as many residuals as unknowns; pad with zeros.
  FactorFit fit(rep, k, std::move(pairs), inputs,
                std::max(residuals, inputs));
  Eigen::VectorXd x(inputs);
  for (Index c = 0; c < k; ++c) {
    const double scale = std::sqrt(values(keep[static_cast<std::size_t>(c)]));
    for (Index i = 0; i < n; ++i) {
      const Complex z = scale * vectors(i, keep[static_cast<std::size_t>(c)]);
      x(c * n + i) = z.real();
      x(n * k + c * n + i) = z.imag();
    }
  }
  Eigen::LevenbergMarquardt<FactorFit> lm(fit);
  lm.setFtol(1e-16);
  lm.setXtol(1e-16);
  lm.setGtol(0.0);
  lm.setMaxfev(2000);
  lm.minimize(x);

  CMatrix v(n, k);
  for (Index c = 0; c < k; ++c) {
    for (Index i = 0; i < n; ++i) {
      v(i, c) = Complex(x(c * n + i), x(n * k + c * n + i));
    }
  }
  if ((schur_mask(r, v * v.adjoint()) - rep).cwiseAbs().maxCoeff() >
      1e-13 * frob_scale(rep)) {
    return std::nullopt;
  }
  return v;
}

std::optional<Decomposition> search_face(const Relation &r,
                                         const VectorState &v,
                                         const HermitianFunctional &phi,
                                         const ExtremalityOptions &opts) {
  const CMatrix &rep = phi.rep();
  const auto n = rep.rows();
  Rng rng(opts.seed);

  // Average several PSD completions: a point deep inside the face of
  // completions, whose range spans every completion's range.
  const CVector &x = v.vector();
  CMatrix center = x * x.adjoint();
  for (std::size_t s = 0; s < opts.face_starts; ++s) {
    CMatrix g(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        g(i, j) = uniform_complex(rng);
      }
    }
    CMatrix start = g * g.adjoint();
    start /= start.trace().real();
    center += dykstra_completion(r, rep, start, opts.completion).psd;
  }
  center = hermitian_part(center / static_cast<double>(opts.face_starts + 1));
  // A PSD matrix with a zero diagonal entry has a zero row there.
  for (Index i = 0; i < n; ++i) {
    if (rep(i, i).real() <= 0.0) {
      center.row(i).setZero();
      center.col(i).setZero();
    }
  }

  const HermitianEigen spectrum = hermitian_eigen(center);
  const double top = spectrum.values.maxCoeff();
  Index rank = 0;
  for (Index i = 0; i < n; ++i) {
    rank += spectrum.values(i) > 1e-6 * top ? 1 : 0;
  }
  // Dykstra stalls near thin faces and leaves small spurious eigenvalues, so
  // the face rank can be overestimated; step down until a fit is exact.
  std::optional<CMatrix> factor;
  for (Index k = rank; k >= 2 && !factor; --k) {
    factor = factored_completion(r, rep, spectrum, k);
  }
  if (!factor) {
    return std::nullopt;
  }
  const CMatrix &f = *factor;
  const auto k = f.cols();
  const CMatrix gram = f.adjoint() * f;
  const double gram_trace = gram.trace().real();

  // V (I +- Y / 2) V* stays PSD for ||Y|| = 1 and keeps the trace when
  // tr(V* V Y) = 0.
  for (std::size_t d = 0; d < opts.face_directions; ++d) {
    CMatrix y(k, k);
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        y(i, j) = uniform_complex(rng);
      }
    }
    y = hermitian_part(y);
    y -= ((gram * y).trace().real() / gram_trace) * CMatrix::Identity(k, k);
    const double span = operator_norm(y);
    if (span == 0.0) {
      continue;
    }
    y /= 2.0 * span;
    const CMatrix up = hermitian_part(f * (CMatrix::Identity(k, k) + y) * f.adjoint());
    const CMatrix down = hermitian_part(f * (CMatrix::Identity(k, k) - y) * f.adjoint());
    const CMatrix shift = schur_mask(r, up - down) / 2.0;
    if (auto found = check_decomposition(phi, 0.5, rep + shift, rep - shift,
                                         up, down, opts)) {
      return found;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<Decomposition>
find_state_decomposition(const Relation &r, const VectorState &v,
                         const ExtremalityOptions &opts) {
  const HermitianFunctional phi = restrict_vector_state(r, v);
  if (opts.use_component_split) {
    if (auto found = split_by_classes(r, v, phi, opts)) {
      return found;
    }
  }
  return search_face(r, v, phi, opts);
}

bool extremality_oracle(const Relation &r, const VectorState &v,
                        const ExtremalityOptions &opts) {
  return !find_state_decomposition(r, v, opts).has_value();
}

// ------------------------------------------------------ numerical radius

double numerical_radius(const Relation &r, const PatternMatrix &b) {
  if (!(b.relation() == r)) {
    throw std::invalid_argument("numerical_radius: element of a different E(R)");
  }
  const auto n = static_cast<Index>(r.size());
  CMatrix h = CMatrix::Zero(2 * n, 2 * n);
  h.topRightCorner(n, n) = b.entries();
  h.bottomLeftCorner(n, n) = b.entries().adjoint();
  auto [values, vectors] = hermitian_eigen(h);
  const CVector w = vectors.col(values.size() - 1);
  // Vector quasi-state <w, . w> on M_2(E), evaluated at h.
  const Complex value = w.dot(h * w);
  return std::abs(value);
}

} // namespace tolsys
