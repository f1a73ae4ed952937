#include "doctest.h"

#include <string>

#include "tolsys/error.hpp"
#include "tolsys/io.hpp"

using namespace tolsys;

namespace {

std::string message_of(auto &&fn) {
  try {
    fn();
  } catch (const std::exception &e) {
    return e.what();
  }
  return {};
}

bool mentions(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("io") {
  TEST_CASE("relation round trip") {
    const Relation r = io::parse_relation(R"({"n": 4, "edges": [[0, 1], [2, 1], [3, 3]]})");
    CHECK(r.edge_count() == 2);
    CHECK(io::parse_relation(io::relation_to_json(r).dump()) == r);
  }

  TEST_CASE("adjacency form") {
    const Relation r = io::parse_relation(R"({"n": 2, "adj": [[1, 1], [1, 1]]})");
    CHECK(r.is_full());
    CHECK_THROWS_AS(io::parse_relation(R"({"n": 2, "adj": [[1, 1], [0, 1]]})"), InvariantError);
    CHECK_THROWS_AS(io::parse_relation(R"({"n": 2, "adj": [[0, 0], [0, 1]]})"), InvariantError);
    CHECK_THROWS_AS(io::parse_relation(R"({"n": 2, "adj": [[1, 2], [2, 1]]})"), InputError);
  }

  TEST_CASE("schema errors carry the location") {
    const std::string bad_index = message_of(
        [] { io::parse_relation(R"({"n": 3, "edges": [[0, 1], [1, 7]]})"); });
    CHECK(mentions(bad_index, "edges[1]"));
    const std::string bad_shape = message_of(
        [] { io::parse_relation(R"({"n": 3, "edges": [[0, 1, 2]]})"); });
    CHECK(mentions(bad_shape, "edges[0]"));
    CHECK_THROWS_AS(io::parse_relation(R"({"edges": []})"), InputError);
    CHECK_THROWS_AS(io::parse_relation(R"({"n": 0, "edges": []})"), InputError);
    CHECK_THROWS_AS(io::parse_relation(R"({"n": 2, "edges": [[0, -1]]})"), InputError);
    CHECK_THROWS_AS(io::parse_relation("{not json"), InputError);
    CHECK_THROWS_AS(io::parse_relation("[1, 2]"), InputError);
  }

  TEST_CASE("metric csv") {
    const FiniteMetric m = io::parse_metric_csv("0, 1, 2\n1,0,1\r\n2,1,0\n\n");
    CHECK(m.size() == 3);
    CHECK(m(0, 2) == 2.0);
    CHECK(io::parse_metric_csv(io::metric_to_csv(m))(0, 2) == 2.0);
    const std::string bad = message_of([] { io::parse_metric_csv("0,1\n1,x\n"); });
    CHECK(mentions(bad, "line 2"));
    CHECK(mentions(bad, "column 2"));
    CHECK_THROWS_AS(io::parse_metric_csv("0,1\n1,0,3\n"), InputError);
    CHECK_THROWS_AS(io::parse_metric_csv(""), InputError);
    CHECK_THROWS_AS(io::parse_metric_csv("0,1\n2,0\n"), InvariantError);
  }

  TEST_CASE("weighted graph") {
    const io::WeightedGraph g = io::weighted_graph_from_json(
        io::json::parse(R"({"n": 3, "edges": [[0, 1, 0.5], [1, 2, 2]]})"));
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.edges[1].length == 2.0);
    CHECK_THROWS_AS(io::weighted_graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0, 1]]})")),
                    InputError);
  }

  TEST_CASE("vectors") {
    const VectorState v = io::vector_from_json(io::json::parse(R"({"v": [3, [0, 4]]})"));
    CHECK(v.vector()(0).real() == doctest::Approx(0.6));
    CHECK(v.vector()(1).imag() == doctest::Approx(0.8));
    CHECK_THROWS_AS(io::vector_from_json(io::json::parse(R"({"v": [0, 0]})")), InvariantError);
    CHECK_THROWS_AS(io::vector_from_json(io::json::parse(R"({"v": ["a"]})")), InputError);
    CHECK_THROWS_AS(io::vector_from_json(io::json::parse(R"({"v": []})")), InputError);
  }

  TEST_CASE("functionals fill the lower triangle") {
    const HermitianFunctional phi = io::functional_from_json(io::json::parse(
        R"({"relation": {"n": 2, "edges": [[0, 1]]},
            "entries": [[0, 0, 1, 0], [0, 1, 0.5, 0.25], [1, 1, -1, 0]]})"));
    CHECK(phi.rep()(1, 0) == Complex(0.5, -0.25));
    CHECK(phi.trace() == 0.0);
    const HermitianFunctional back = io::functional_from_json(io::functional_to_json(phi));
    CHECK(back.rep() == phi.rep());
    CHECK_THROWS_AS(io::functional_from_json(io::json::parse(
                        R"({"relation": {"n": 2, "edges": []}, "entries": [[0, 1, 1, 0]]})")),
                    InvariantError);
    CHECK_THROWS_AS(io::functional_from_json(io::json::parse(
                        R"({"relation": {"n": 2, "edges": [[0, 1]]}, "entries": [[1, 0, 1, 0]]})")),
                    InputError);
    CHECK_THROWS_AS(io::functional_from_json(io::json::parse(
                        R"({"relation": {"n": 2, "edges": []}, "entries": [[0, 0, 1, 1]]})")),
                    InvariantError);
  }

  TEST_CASE("pattern matrices") {
    const PatternMatrix b = io::pattern_matrix_from_json(io::json::parse(
        R"({"relation": {"n": 2, "edges": [[0, 1]]}, "entries": [[1, 0, 2, -1]]})"));
    CHECK(b.entries()(1, 0) == Complex(2.0, -1.0));
    CHECK(b.entries()(0, 1) == Complex(0.0, 0.0));
    CHECK(io::pattern_matrix_from_json(io::pattern_matrix_to_json(b)).entries() == b.entries());
  }

  TEST_CASE("content hash") {
    CHECK(io::content_hash("") == "cbf29ce484222325");
    CHECK(io::content_hash("a") == "af63dc4c8601ec8c");
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), InputError);
  }
}
