#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tolsys/error.hpp"
#include "tolsys/generators.hpp"
#include "tolsys/invariants.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/opsys.hpp"

using namespace tolsys;

namespace {

Relation path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return Relation::from_edges(3, e);
}

// Number of set partitions of an n-set.
std::size_t bell(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1));
  t[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (std::size_t j = 1; j <= i; ++j) {
      t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
    }
  }
  return t[n][0];
}

} // namespace

TEST_SUITE("linalg") {
  TEST_CASE("norms") {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = -4.0;
    CHECK(operator_norm(d) == doctest::Approx(4.0));
    CHECK(trace_norm(d) == doctest::Approx(7.0));
    const auto split = spectral_split(d);
    CHECK(split.plus(0, 0).real() == doctest::Approx(3.0));
    CHECK(split.minus(1, 1).real() == doctest::Approx(4.0));
  }

  TEST_CASE("trace norm equals the eigenvalue sum on hermitian input") {
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
      CMatrix a(5, 5);
      for (Eigen::Index i = 0; i < 5; ++i) {
        for (Eigen::Index j = 0; j < 5; ++j) {
          a(i, j) = uniform_complex(rng);
        }
      }
      const CMatrix h = hermitian_part(a);
      CHECK(hermitian_defect(h) == 0.0);
      const double by_eigen = hermitian_eigen(h).values.cwiseAbs().sum();
      CHECK(trace_norm(h) == doctest::Approx(by_eigen).epsilon(1e-12));
      CHECK(min_eigenvalue(project_psd(h)) >= -1e-12);
    }
  }

  TEST_CASE("derived seeds differ") {
    CHECK(derive_seed(42, 0) != derive_seed(42, 1));
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
  }
}

TEST_SUITE("opsys") {
  TEST_CASE("schur projection") {
    const Relation r = path3();
    const CMatrix ones = CMatrix::Ones(3, 3);
    const PatternMatrix p = schur_project(r, ones);
    CHECK(p.entries()(0, 2) == Complex(0.0, 0.0));
    CHECK(p.entries()(0, 1) == Complex(1.0, 0.0));
    CHECK(schur_mask(r, p.entries()) == p.entries());
    CHECK(off_pattern(r, ones)(0, 2) == Complex(1.0, 0.0));
    CHECK(off_pattern(r, ones)(1, 2) == Complex(0.0, 0.0));
    CHECK(indicator_matrix(r) == p.entries());
    CHECK_THROWS_AS(PatternMatrix(r, ones), InvariantError);
  }

  TEST_CASE("identity pattern keeps the diagonal only") {
    Rng rng(3);
    const Relation id = Relation::identity(4);
    const PatternMatrix b = random_element(Relation::full(4), rng);
    const CMatrix m = schur_mask(id, b.entries());
    CHECK(m.diagonal() == b.entries().diagonal());
    CHECK((m - CMatrix(m.diagonal().asDiagonal())).norm() == 0.0);
  }

  TEST_CASE("indefinite path pattern") {
    const double lambda = min_eigenvalue(indicator_matrix(path3()));
    CHECK(std::abs(lambda - (1.0 - std::sqrt(2.0))) <= 1e-9);
    CHECK_FALSE(is_psd(indicator_matrix(path3())));
    CHECK_FALSE(is_equivalence_via_triangle(path3()));
  }

  TEST_CASE("is_psd") {
    CHECK(is_psd(CMatrix::Identity(3, 3)));
    CHECK(is_psd(CMatrix::Zero(3, 3)));
    CMatrix h = CMatrix::Identity(2, 2);
    h(1, 1) = -1e-12;
    CHECK(is_psd(h));
    h(1, 1) = -1e-6;
    CHECK_FALSE(is_psd(h));
    CMatrix skew = CMatrix::Zero(2, 2);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(is_psd(skew), std::invalid_argument);
  }

  TEST_CASE("binary lemma: exhaustive on five points") {
    std::size_t equivalences = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const Relation r = relation_from_mask(5, mask);
      const bool psd = is_psd(indicator_matrix(r));
      const bool triangle = is_equivalence_via_triangle(r);
      CHECK(psd == triangle);
      CHECK(triangle == r.is_transitive());
      equivalences += r.is_transitive() ? 1 : 0;
    }
    // Equivalence relations are set partitions.
    CHECK(equivalences == bell(5));
  }

  TEST_CASE("random elements respect the pattern") {
    Rng rng(9);
    const Relation r = path3();
    for (int k = 0; k < 10; ++k) {
      const PatternMatrix b = random_element(r, rng);
      CHECK(b.entries()(0, 2) == Complex(0.0, 0.0));
      const CMatrix h = random_hermitian_element(r, rng);
      CHECK(hermitian_defect(h) == 0.0);
      CHECK(h(2, 0) == Complex(0.0, 0.0));
    }
  }

  TEST_CASE("product support equals symmetrized composition") {
    for (std::uint64_t k = 0; k < 40; ++k) {
      Rng rng(derive_seed(21, k));
      const std::size_t n = uniform_size(1, 7, rng);
      const Relation r1 = random_relation(n, 0.4, rng);
      const Relation r2 = random_relation(n, 0.4, rng);
      CHECK(product_span_support(r1, r2, 8, rng()) == symmetrized_compose(r1, r2).adj());
    }
    // Path squared is full on three points.
    CHECK(product_span_support(path3(), path3(), 8, 1) == Relation::full(3).adj());
  }

  TEST_CASE("support_of") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1e-13;
    m(1, 0) = 1e-11;
    const BoolMatrix s = support_of(m);
    CHECK_FALSE(s(0, 1));
    CHECK(s(1, 0));
  }

  TEST_CASE("generated algebra degree agrees with the Floyd-Warshall diameter") {
    for (std::uint64_t k = 0; k < 80; ++k) {
      Rng rng(derive_seed(22, k));
      const std::size_t n = uniform_size(1, 12, rng);
      const Relation r = random_connected_relation(n, 0.1, rng);
      const AlgebraDegree d = generated_algebra_degree(r);
      CHECK(d.degree == *oracle::diameter(oracle::grid_of(r)));
      CHECK(d.blocks == std::vector<std::size_t>{n});
    }
    const AlgebraDegree id = generated_algebra_degree(Relation::identity(3));
    CHECK(id.degree == 1);
    CHECK(id.blocks == std::vector<std::size_t>{1, 1, 1});
  }

  TEST_CASE("matrix levels") {
    const Relation r = path3();
    const CMatrix e = indicator_matrix(r);
    const MatrixLevelElement diag(r, 2, {e, CMatrix::Zero(3, 3), CMatrix::Zero(3, 3), e});
    CHECK(diag.assembled().rows() == 6);
    CHECK_FALSE(level_positive(diag));
    const CMatrix id = CMatrix::Identity(3, 3);
    const MatrixLevelElement ok(r, 2, {id, id, id, id});
    CHECK(level_positive(ok));
    CHECK_THROWS(MatrixLevelElement(r, 2, {id, id, id}));
    CHECK_THROWS_AS(MatrixLevelElement(r, 1, {CMatrix::Ones(3, 3)}), InvariantError);
  }
}

TEST_SUITE("invariants") {
  TEST_CASE("band p=5 N=2 has propagation 2") {
    const Propagation p = propagation_number(band_relation(5, 2));
    CHECK(p.connected);
    CHECK(p.value == 2);
    CHECK(cstar_envelope_blocks(band_relation(5, 2)) == std::vector<std::size_t>{5});
  }

  TEST_CASE("identity relation: one block and propagation 1 per point") {
    const Propagation p = propagation_number(Relation::identity(4));
    CHECK_FALSE(p.connected);
    CHECK(p.value == 1);
    CHECK(p.per_component == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(cstar_envelope_blocks(Relation::identity(4)) ==
          std::vector<std::size_t>{1, 1, 1, 1});
  }

  TEST_CASE("disconnected relations aggregate by max") {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
    const Propagation p = propagation_number(Relation::from_edges(5, e));
    CHECK(p.per_component == std::vector<std::size_t>{2, 1});
    CHECK(p.value == 2);
    CHECK(generated_algebra_degree(Relation::from_edges(5, e)).degree == 2);
  }

  TEST_CASE("band tables against the diameter formula") {
    std::size_t shifted = 0;
    for (std::size_t p = 2; p <= 12; ++p) {
      for (std::size_t n = 1; n < p; ++n) {
        const std::size_t formula = (p - 1 + n - 1) / n;
        CHECK(propagation_number(band_relation(p, n)).value == formula);
        if (band_ceil_p_over_n(p, n) != formula) {
          CHECK((p - 1) % n == 0);
          ++shifted;
        }
      }
    }
    CHECK(shifted == 29);
    CHECK(band_ceil_p_over_n(4, 1) == 4);
    CHECK(propagation_number(band_relation(4, 1)).value == 3);
  }

  TEST_CASE("family constructors check their ranges") {
    CHECK_THROWS_AS(band_relation(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(band_relation(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(circulant_band_relation(6, 4), std::invalid_argument);
    CHECK_NOTHROW(circulant_band_relation(6, 3));
  }
}
