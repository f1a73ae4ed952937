#include "doctest.h"

#include <stdexcept>

#include "tolsys/error.hpp"
#include "tolsys/generators.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/parallel.hpp"
#include "tolsys/relation.hpp"
#include "tolsys/sweep.hpp"
#include "tolsys/verify.hpp"

using namespace tolsys;

TEST_SUITE("sweep") {
  TEST_CASE("band grid") {
    const auto grid = sweep::parse_grid(sweep::Family::band, "p=4..12;N=1..3");
    const auto rows = sweep::evaluate(grid);
    CHECK(rows.size() == 27);
    for (const auto &row : rows) {
      CHECK(row.oracle_agrees);
      CHECK(row.formula == row.propagation);
      CHECK(row.predicted_differs == ((row.size - 1) % row.band == 0));
    }
    CHECK(rows.front().size == 4);
    CHECK(rows.front().band == 1);
    CHECK(rows[1].band == 2);
  }

  TEST_CASE("out-of-domain rows are skipped") {
    const auto band = sweep::evaluate(sweep::parse_grid(sweep::Family::band, "p=3;N=1,2,3,4"));
    CHECK(band.size() == 2);
    const auto circ = sweep::evaluate(sweep::parse_grid(sweep::Family::circulant, "m=6;N=1..5"));
    CHECK(circ.size() == 3);
    const auto empty = sweep::evaluate(sweep::parse_grid(sweep::Family::band, "p=5..4;N=1"));
    CHECK(empty.empty());
    // A key that is not given is an empty axis.
    CHECK(sweep::evaluate(sweep::parse_grid(sweep::Family::band, "p=4")).empty());
    CHECK(sweep::to_csv(sweep::Family::band, empty) ==
          sweep::csv_header(sweep::Family::band));
  }

  TEST_CASE("circle grid") {
    const auto rows =
        sweep::evaluate(sweep::parse_grid(sweep::Family::circle, "p=1000;eps=0.3,0.21,0.11"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].eps == "0.3");
    CHECK(rows[0].propagation == 2);
    CHECK(rows[1].propagation == 3);
    CHECK(rows[2].propagation == 5);
    for (const auto &row : rows) {
      CHECK(row.oracle_agrees);
      CHECK(row.predicted == row.propagation);
    }
    CHECK_THROWS_AS(sweep::evaluate(sweep::parse_grid(sweep::Family::circle, "p=10;eps=0.05")),
                    InputError);
  }

  TEST_CASE("grid errors") {
    CHECK_THROWS_AS(sweep::parse_grid(sweep::Family::band, "q=4;N=1"), InputError);
    CHECK_THROWS_AS(sweep::parse_grid(sweep::Family::band, "p=a;N=1"), InputError);
    CHECK_THROWS_AS(sweep::parse_grid(sweep::Family::circle, "p=10;eps=0.1..0.3"), InputError);
    CHECK_THROWS_AS(sweep::parse_family("ring"), InputError);
    CHECK(sweep::parse_family("circulant") == sweep::Family::circulant);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("small configurations pass") {
    verify::Config config;
    config.n = 3;
    config.trials = 10;
    for (const auto &name : verify::suite_names()) {
      verify::Config c = config;
      if (name == "composition-law") {
        c.n.reset();
        c.p = 200;
      }
      const verify::SuiteResult r = verify::run_suite(name, c);
      INFO(name);
      CHECK(r.ok());
      CHECK(r.total > 0);
      CHECK_FALSE(r.reproducer.has_value());
    }
  }

  TEST_CASE("reports are deterministic") {
    verify::Config config;
    config.seed = 7;
    config.n = 3;
    config.trials = 8;
    const auto a = verify::run("jordan", config).to_json(config);
    const auto b = verify::run("jordan", config).to_json(config);
    CHECK(a.dump() == b.dump());
    CHECK(a["seed"] == 7);
  }

  TEST_CASE("unknown suites and bad scales") {
    CHECK_THROWS_AS(verify::run_suite("nope", {}), std::invalid_argument);
    CHECK(verify::is_suite("all"));
    CHECK_FALSE(verify::is_suite("nope"));
    verify::Config c;
    c.n = 0;
    CHECK_THROWS_AS(verify::run_suite("schur-lemma", c), std::invalid_argument);
  }
}

TEST_SUITE("parallel") {
  TEST_CASE("parallel kernels match their serial references") {
    for (std::uint64_t k = 0; k < 20; ++k) {
      Rng rng(derive_seed(31, k));
      const std::size_t n = uniform_size(20, 150, rng);
      const Relation a = random_relation(n, 0.03, rng);
      const Relation b = random_relation(n, 0.03, rng);
      CHECK(compose(a.adj(), b.adj()) == compose_serial(a.adj(), b.adj()));
      CHECK(diameter_bfs(a) == diameter_bfs_serial(a));
    }
  }

  TEST_CASE("map_indices keeps index order") {
    const auto par_out = par::map_indices<std::uint64_t>(1000, [](std::size_t i) {
      return derive_seed(5, i);
    });
    std::vector<std::uint64_t> serial(1000);
    par::for_each_index_serial(1000, [&](std::size_t i) { serial[i] = derive_seed(5, i); });
    CHECK(par_out == serial);
    CHECK(par::max_threads() >= 1);
  }
}
