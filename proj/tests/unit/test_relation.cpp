#include "doctest.h"

#include <stdexcept>

#include "oracles.hpp"
#include "tolsys/error.hpp"
#include "tolsys/generators.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/rational.hpp"
#include "tolsys/relation.hpp"

using namespace tolsys;

TEST_SUITE("rational") {
  TEST_CASE("parse and normalise") {
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational::parse("1e-2") == Rational(1, 100));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("0.3").to_string() == "3/10");
  }

  TEST_CASE("junk is rejected") {
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse("0.1.2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1e"), InputError);
  }

  TEST_CASE("from_double keeps the shortest decimal") {
    CHECK(Rational::from_double(0.3) == Rational(3, 10));
    CHECK(Rational::from_double(0.21) == Rational(21, 100));
    CHECK(Rational::from_double(2.0) == Rational(2, 1));
  }

  TEST_CASE("ceil, floor and ordering") {
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4, 2).ceil() == 2);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK(Rational(3, 10) * 1000 == Rational(300, 1));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2, 1));
  }

  TEST_CASE("to_double is correctly rounded") {
    // 0.1 + 0.2 formed exactly rounds to the same double as the literal 0.3.
    CHECK((Rational::parse("0.1") + Rational::parse("0.2")).to_double() == 0.3);
    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  }

  TEST_CASE("overflow is reported") {
    const Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * 4, std::overflow_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }
}

TEST_SUITE("relation") {
  TEST_CASE("construction enforces reflexive and symmetric") {
    BoolMatrix m(3);
    m.set(0, 0);
    m.set(1, 1);
    CHECK_THROWS_AS(Relation{m}, InvariantError);
    m.set(2, 2);
    m.set(0, 1);
    CHECK_THROWS_AS(Relation{m}, InvariantError);
    m.set(1, 0);
    CHECK_NOTHROW(Relation{m});
  }

  TEST_CASE("from_edges") {
    const std::vector<Edge> edges{{0, 1}, {2, 1}, {1, 1}};
    const Relation r = Relation::from_edges(3, edges);
    CHECK(r.contains(1, 0));
    CHECK(r.contains(1, 2));
    CHECK_FALSE(r.contains(0, 2));
    CHECK(r.edge_count() == 2);
    CHECK(r.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    const std::vector<Edge> bad{{0, 3}};
    CHECK_THROWS_AS(Relation::from_edges(3, bad), InputError);
  }

  TEST_CASE("identity and full") {
    CHECK(Relation::identity(4).edge_count() == 0);
    CHECK(Relation::full(4).edge_count() == 6);
    CHECK(Relation::full(4).is_full());
    CHECK(Relation::full(4).is_transitive());
    CHECK(Relation::identity(4).is_transitive());
    const std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK_FALSE(Relation::from_edges(3, path).is_transitive());
  }

  TEST_CASE("restricted_to re-indexes") {
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    const Relation r = Relation::from_edges(4, path);
    const std::vector<std::size_t> subset{3, 1, 2};
    const Relation s = r.restricted_to(subset);
    CHECK(s.size() == 3);
    CHECK(s.contains(0, 2)); // 3 ~ 2
    CHECK(s.contains(1, 2)); // 1 ~ 2
    CHECK_FALSE(s.contains(0, 1));
  }

  TEST_CASE("compose matches the triple loop") {
    for (std::uint64_t k = 0; k < 60; ++k) {
      Rng rng(derive_seed(11, k));
      const std::size_t n = uniform_size(1, 70, rng);
      const Relation a = random_relation(n, 0.1, rng);
      const Relation b = random_relation(n, 0.1, rng);
      const auto expected = oracle::compose(oracle::grid_of(a), oracle::grid_of(b));
      CHECK(oracle::grid_of(compose(a, b)) == expected);
      CHECK(compose_serial(a.adj(), b.adj()) == compose(a.adj(), b.adj()));
    }
  }

  TEST_CASE("symmetrized composition") {
    // Composition of two relations need not be symmetric; the union is.
    const std::vector<Edge> e1{{0, 1}};
    const std::vector<Edge> e2{{1, 2}};
    const Relation r1 = Relation::from_edges(3, e1);
    const Relation r2 = Relation::from_edges(3, e2);
    const BoolMatrix raw = compose(r1, r2);
    CHECK(raw(0, 2));
    CHECK_FALSE(raw(2, 0));
    const Relation s = symmetrized_compose(r1, r2);
    CHECK(s.contains(0, 2));
    CHECK(s.contains(2, 0));
    CHECK(symmetrized_compose(r1, Relation::identity(3)) == r1);
  }

  TEST_CASE("closure and components agree with union-find") {
    for (std::uint64_t k = 0; k < 100; ++k) {
      Rng rng(derive_seed(12, k));
      const std::size_t n = uniform_size(1, 30, rng);
      const Relation r = random_relation(n, 0.06, rng);
      const auto expected = oracle::classes(oracle::grid_of(r));
      const Closure c = transitive_closure(r);
      CHECK(c.classes == expected);
      CHECK(connected_components(r) == expected);
      CHECK(c.relation.is_transitive());
      CHECK(r.adj().subset_of(c.relation.adj()));
    }
  }

  TEST_CASE("diameter agrees with Floyd-Warshall") {
    for (std::uint64_t k = 0; k < 150; ++k) {
      Rng rng(derive_seed(13, k));
      const std::size_t n = uniform_size(1, 25, rng);
      const Relation r = random_relation(n, 0.15, rng);
      const auto expected = oracle::diameter(oracle::grid_of(r));
      CHECK(diameter(r) == expected);
      CHECK(diameter_bfs(r) == expected);
      CHECK(diameter_bfs_serial(r) == expected);
    }
  }

  TEST_CASE("diameter conventions") {
    CHECK(diameter(Relation::identity(1)) == std::optional<std::size_t>{1});
    CHECK(diameter(Relation::full(5)) == std::optional<std::size_t>{1});
    CHECK_FALSE(diameter(Relation::identity(2)).has_value());
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    CHECK(diameter(Relation::from_edges(4, path)) == std::optional<std::size_t>{3});
    const auto d = bfs_distances(Relation::identity(3), 0);
    CHECK(d[0] == 0);
    CHECK(d[1] == kUnreachable);
  }

  TEST_CASE("band and circulant detection and closed forms") {
    for (std::size_t p = 1; p <= 30; ++p) {
      for (std::size_t w = 0; w <= p; ++w) {
        const Relation band = band_pattern(p, w);
        CHECK(detect_band_width(band) == std::optional<std::size_t>{std::min(w, p - 1)});
        if (w >= 1 && p >= 2) {
          CHECK(diameter_bfs(band) ==
                std::optional<std::size_t>{band_diameter_closed_form(p, w)});
        }
      }
    }
    for (std::size_t m = 3; m <= 30; ++m) {
      for (std::size_t w = 1; w <= m / 2; ++w) {
        const Relation c = circulant_pattern(m, w);
        CHECK(diameter_bfs(c) ==
              std::optional<std::size_t>{circulant_diameter_closed_form(m, w)});
        CHECK(diameter(c) == diameter_bfs(c));
      }
    }
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    const Relation s = Relation::from_edges(4, star);
    CHECK_FALSE(detect_band_width(s).has_value());
    CHECK_FALSE(detect_circulant_band_width(s).has_value());
    CHECK(diameter(s) == std::optional<std::size_t>{2});
    CHECK(band_diameter_closed_form(4, 1) == 3);
    CHECK(band_diameter_closed_form(5, 2) == 2);
    CHECK(band_diameter_closed_form(1, 1) == 1);
    CHECK(circulant_diameter_closed_form(12, 6) == 1);
    CHECK(circulant_diameter_closed_form(7, 1) == 3);
  }

  TEST_CASE("bool matrix helpers") {
    BoolMatrix m(70);
    m.set(3, 65);
    CHECK(m(3, 65));
    CHECK(m.count() == 1);
    CHECK(m.transposed()(65, 3));
    CHECK_FALSE(m.is_symmetric());
    m.set(3, 65, false);
    CHECK(m.count() == 0);
    CHECK(m.words_per_row() == 2);
  }
}
