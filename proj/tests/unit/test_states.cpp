#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "tolsys/error.hpp"
#include "tolsys/generators.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/opsys.hpp"
#include "tolsys/states.hpp"

using namespace tolsys;

namespace {

Relation path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return Relation::from_edges(3, e);
}

CMatrix path_rep() {
  CMatrix m = CMatrix::Ones(3, 3);
  m(0, 2) = m(2, 0) = 0.0;
  return m;
}

CMatrix diag(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

VectorState unit(std::initializer_list<Complex> entries) {
  CVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex z : entries) {
    v(i++) = z;
  }
  return VectorState::normalized(v);
}

double max_abs(const CMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_SUITE("states") {
  TEST_CASE("functionals validate their representative") {
    CHECK_THROWS_AS(HermitianFunctional(path3(), CMatrix::Ones(3, 3)), InvariantError);
    CMatrix skew = CMatrix::Zero(2, 2);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianFunctional(Relation::full(2), skew), InvariantError);
    const HermitianFunctional z = HermitianFunctional::zero(path3());
    CHECK(z.trace() == 0.0);
  }

  TEST_CASE("functional_from_density") {
    Rng rng(4);
    const CMatrix id = CMatrix::Identity(4, 4) / 4.0;
    const Relation r = random_relation(4, 0.5, rng);
    CHECK(max_abs(functional_from_density(r, id, false).rep() - id) == 0.0);

    CVector v = CVector::Ones(3) / std::sqrt(3.0);
    const CMatrix rho = v * v.adjoint();
    const HermitianFunctional full = functional_from_density(Relation::full(3), rho, true);
    CHECK(full.trace() == doctest::Approx(1.0));
    CHECK(max_abs(full.rep() - rho) < 1e-15);

    const HermitianFunctional p = functional_from_density(path3(), rho, false);
    CHECK(max_abs(p.rep() - path_rep() / 3.0) < 1e-15);

    CHECK_THROWS_AS(functional_from_density(Relation::identity(2), CMatrix::Zero(2, 2), true),
                    std::domain_error);
  }

  TEST_CASE("pairing does not depend on the completion") {
    Rng rng(6);
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = uniform_size(1, 6, rng);
      const Relation r = random_relation(n, 0.5, rng);
      const HermitianFunctional phi(r, random_hermitian_element(r, rng));
      const CMatrix off = off_pattern(r, random_hermitian_element(Relation::full(n), rng));
      const CMatrix completion = phi.rep() + off;
      const PatternMatrix b = random_element(r, rng);
      const Complex direct = phi.pairing(b.entries());
      const Complex via = (completion * b.entries()).trace();
      CHECK(std::abs(direct - via) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }

  TEST_CASE("dual_positive examples") {
    // Already PSD.
    const HermitianFunctional psd(Relation::full(2), CMatrix::Identity(2, 2));
    DualPositivity a = dual_positive(psd);
    CHECK(a.answer());
    REQUIRE(a.certificate);
    CHECK(max_abs(*a.certificate - CMatrix::Identity(2, 2)) == 0.0);

    // Negative diagonal survives every completion.
    const HermitianFunctional neg(Relation::identity(2), diag(1.0, -0.5));
    DualPositivity b = dual_positive(neg);
    CHECK(b.verdict == Verdict::not_positive);
    CHECK_FALSE(b.certificate);

    // Path pattern of ones: completed by the all-ones matrix.
    const HermitianFunctional path(path3(), path_rep());
    DualPositivity c = dual_positive(path);
    CHECK(c.answer());
    REQUIRE(c.certificate);
    CHECK(verify_certificate(path, *c.certificate, 1e-8));
    CHECK(std::abs((*c.certificate)(0, 2) - Complex(1.0, 0.0)) < 1e-6);
  }

  TEST_CASE("dual_positive rejects a violated 2x2 minor") {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    m(0, 1) = m(1, 0) = 2.0;
    const HermitianFunctional phi(path3(), m);
    CHECK(dual_positive(phi).verdict == Verdict::not_positive);
  }

  TEST_CASE("certificates of random states verify") {
    Rng rng(8);
    for (int k = 0; k < 25; ++k) {
      const std::size_t n = uniform_size(2, 5, rng);
      const Relation r = random_relation(n, 0.5, rng);
      CMatrix g(static_cast<Eigen::Index>(n), 2);
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        g(i, 0) = uniform_complex(rng);
        g(i, 1) = uniform_complex(rng);
      }
      const HermitianFunctional phi = functional_from_density(r, g * g.adjoint(), true);
      const DualPositivity d = dual_positive(phi);
      CHECK(d.answer());
      REQUIRE(d.certificate);
      CHECK(is_psd(*d.certificate, 1e-8));
      CHECK(max_abs(schur_mask(r, *d.certificate) - phi.rep()) <= 1e-8);
    }
  }

  TEST_CASE("dual norm: full relation is the trace norm") {
    Rng rng(10);
    const Relation full = Relation::full(4);
    const HermitianFunctional phi(full, random_hermitian_element(full, rng));
    const NormBracket b = dual_norm_bracket(phi);
    CHECK(b.upper == doctest::Approx(trace_norm(phi.rep())).epsilon(1e-12));
    CHECK(b.upper - b.lower <= 1e-9);
  }

  TEST_CASE("dual norm of positive functionals is the trace") {
    Rng rng(12);
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = uniform_size(2, 5, rng);
      const Relation r = random_relation(n, 0.5, rng);
      CVector v(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = uniform_complex(rng);
      }
      const HermitianFunctional phi = functional_from_density(r, v * v.adjoint(), true);
      CHECK(std::abs(dual_norm_hermitian(phi) - 1.0) <= 1e-6);
    }
  }

  TEST_CASE("dual norm of the path pattern") {
    const HermitianFunctional phi(path3(), path_rep());
    const NormBracket b = dual_norm_bracket(phi);
    CHECK(b.upper <= 3.0 + 1e-9);
    CHECK(b.upper - b.lower <= 1e-3);
    CHECK(max_abs(schur_mask(path3(), b.completion) - phi.rep()) < 1e-12);
    CHECK(operator_norm(b.witness) <= 1.0 + 1e-12);
    CHECK(max_abs(off_pattern(path3(), b.witness)) == 0.0);
  }

  TEST_CASE("jordan: spectral split of diag(1, -1)") {
    const HermitianFunctional phi(Relation::full(2), diag(1.0, -1.0));
    const JordanDecomposition j = jordan_decompose(phi);
    CHECK(max_abs(j.plus.rep() - diag(1.0, 0.0)) < 1e-12);
    CHECK(max_abs(j.minus.rep() - diag(0.0, 1.0)) < 1e-12);
    CHECK(j.norm == doctest::Approx(2.0));
    CHECK(j.plus_trace + j.minus_trace == doctest::Approx(2.0));
  }

  TEST_CASE("jordan of zero") {
    const JordanDecomposition j = jordan_decompose(HermitianFunctional::zero(path3()));
    CHECK(max_abs(j.plus.rep()) == 0.0);
    CHECK(max_abs(j.minus.rep()) == 0.0);
    CHECK(j.norm == 0.0);
  }

  TEST_CASE("jordan additivity on random functionals") {
    for (std::uint64_t k = 0; k < 15; ++k) {
      Rng rng(derive_seed(31, k));
      const std::size_t n = uniform_size(2, 5, rng);
      const Relation r = random_relation(n, 0.5, rng);
      const HermitianFunctional phi(r, random_hermitian_element(r, rng));
      const JordanDecomposition j = jordan_decompose(phi);
      CHECK(max_abs(j.plus.rep() - j.minus.rep() - phi.rep()) <= 1e-12);
      const double sum = dual_norm_hermitian(j.plus) + dual_norm_hermitian(j.minus);
      CHECK(std::abs(j.norm - sum) <= 1e-3 * std::max(1.0, j.norm));
      CHECK(j.norm - j.norm_lower <= 1e-3 * std::max(1.0, j.norm));
    }
  }

  TEST_CASE("vector states") {
    CHECK_THROWS_AS(VectorState(CVector::Ones(2)), InvariantError);
    CHECK_THROWS_AS(VectorState::normalized(CVector::Zero(2)), InvariantError);
    const VectorState v = unit({1.0, 0.0, 1e-12, 2.0});
    CHECK(v.support() == std::vector<std::size_t>{0, 3});
  }

  TEST_CASE("restrict_vector_state examples") {
    const VectorState e1 = unit({1.0, 0.0});
    CHECK(max_abs(restrict_vector_state(Relation::full(2), e1).rep() - diag(1.0, 0.0)) == 0.0);

    const VectorState h = unit({1.0, 1.0});
    const CMatrix half = CMatrix::Constant(2, 2, 0.5);
    CHECK(max_abs(restrict_vector_state(Relation::full(2), h).rep() - half) < 1e-15);
    CHECK(max_abs(restrict_vector_state(Relation::identity(2), h).rep() - diag(0.5, 0.5)) < 1e-15);
    CHECK(restrict_vector_state(Relation::identity(2), h).trace() == doctest::Approx(1.0));
  }

  TEST_CASE("purity criterion examples") {
    CHECK(is_pure_restricted(Relation::identity(3), unit({0.0, 1.0, 0.0})));
    CHECK(is_pure_restricted(Relation::full(2), unit({1.0, 1.0})));
    CHECK_FALSE(is_pure_restricted(Relation::identity(2), unit({1.0, 1.0})));
    // Support {0, 2} on the path: connected only through the unsupported 1.
    CHECK_FALSE(is_pure_restricted(path3(), unit({1.0, 0.0, 1.0})));
    CHECK(is_pure_restricted(path3(), unit({1.0, 1.0, 1.0})));
    const auto classes = support_classes(path3(), unit({1.0, 0.0, 1.0}));
    CHECK(classes == std::vector<std::vector<std::size_t>>{{0}, {2}});
  }

  TEST_CASE("extremality oracle examples") {
    CHECK(extremality_oracle(Relation::identity(2), unit({1.0, 0.0})));
    const auto split = find_state_decomposition(Relation::identity(2), unit({1.0, 1.0}));
    REQUIRE(split);
    CHECK(split->weight == doctest::Approx(0.5));
    CHECK(max_abs(split->first.rep() - diag(1.0, 0.0)) < 1e-12);
    CHECK(max_abs(split->second.rep() - diag(0.0, 1.0)) < 1e-12);
    CHECK_FALSE(extremality_oracle(Relation::identity(2), unit({1.0, 1.0})));
    CHECK(extremality_oracle(path3(), unit({1.0, 1.0, 1.0})));
  }

  TEST_CASE("face search alone finds the splits") {
    ExtremalityOptions opts;
    opts.use_component_split = false;
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
        const Relation r = relation_from_mask(n, mask);
        for (int k = 0; k < 6; ++k) {
          Rng rng(derive_seed(mask * 10 + n, k));
          CVector x(static_cast<Eigen::Index>(n));
          for (Eigen::Index i = 0; i < x.size(); ++i) {
            x(i) = uniform_size(0, 3, rng) == 0 ? Complex(0.0, 0.0) : uniform_complex(rng);
          }
          if (x.norm() == 0.0) {
            x(0) = 1.0;
          }
          const VectorState v = VectorState::normalized(x);
          CHECK(extremality_oracle(r, v, opts) == is_pure_restricted(r, v));
        }
      }
    }
  }

  TEST_CASE("numerical radius") {
    const Relation full = Relation::full(2);
    CHECK(numerical_radius(full, PatternMatrix(full, CMatrix::Zero(2, 2))) == 0.0);
    CMatrix e12 = CMatrix::Zero(2, 2);
    e12(0, 1) = 1.0;
    CHECK(numerical_radius(full, PatternMatrix(full, e12)) == doctest::Approx(1.0));
    Rng rng(14);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = uniform_size(1, 8, rng);
      const Relation r = random_relation(n, 0.5, rng);
      const PatternMatrix b = random_element(r, rng);
      const double sigma = operator_norm(b.entries());
      CHECK(std::abs(numerical_radius(r, b) - sigma) <= 1e-9 * sigma);
    }
    CHECK_THROWS_AS(numerical_radius(Relation::identity(2), PatternMatrix(full, e12)),
                    std::invalid_argument);
  }
}
