#include <doctest.h>

#include <random>

#include "raag1d/errors.hpp"
#include "raag1d/graph_io.hpp"

using namespace raag1d;

TEST_SUITE("graph_io") {
  TEST_CASE("edge list") {
    const auto g = parse_edge_list("# path\n1 2\n2 3  # trailing comment\n\nvertex 9\n3 4\n");
    CHECK(g.vertices() == std::vector<VertexId>{"1", "2", "3", "9", "4"});
    CHECK(g.size() == 3);
    CHECK(g.adjacent("3", "4"));
  }

  TEST_CASE("edge list errors carry line numbers") {
    try {
      parse_edge_list("1 2\n\n1 2 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    try {
      parse_edge_list("1 2\nx x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("lonely\n"), ParseError);
  }

  TEST_CASE("single vertex declaration") {
    const auto g = parse_edge_list("vertex v\n");
    CHECK(g.order() == 1);
    CHECK(g.size() == 0);
  }

  TEST_CASE("DOT subset") {
    const auto g = parse_dot("strict graph G {\n  a -- b -- c;\n  d;\n  \"e f\" -- a\n}\n");
    CHECK(g.vertices() == std::vector<VertexId>{"a", "b", "c", "d", "e f"});
    CHECK(g.size() == 3);
    CHECK(g.adjacent("e f", "a"));
    CHECK_THROWS_AS(parse_dot("digraph { a -> b }"), ParseError);
    CHECK_THROWS_AS(parse_dot("graph { a -- b [color=red] }"), ParseError);
    try {
      parse_dot("graph {\n a -- b;\n a -> c;\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("format detection") {
    CHECK(detect_graph_format("# c\ngraph { a }") == GraphFormat::Dot);
    CHECK(detect_graph_format("strict graph { a }") == GraphFormat::Dot);
    CHECK(detect_graph_format("1 2\n") == GraphFormat::EdgeList);
    CHECK(detect_graph_format("vertex graph\n") == GraphFormat::EdgeList);
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      std::vector<VertexId> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(rng() % 1000) + "_" + std::to_string(i));
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng() % 2) edges.emplace_back(i, j);
      const auto g = SimplicialGraph::from_indices(names, edges);
      CHECK(parse_edge_list(write_edge_list(g)) == g);
      CHECK(parse_dot(write_dot(g)) == g);
      CHECK(parse_graph(write_dot(g)) == g);
      CHECK(parse_graph(write_edge_list(g)) == g);
    }
    const SimplicialGraph odd({"a b", "q\"uote", "x"}, {{"a b", "q\"uote"}});
    CHECK(parse_dot(write_dot(odd)) == odd);
    CHECK_THROWS_AS(write_edge_list(odd), GraphError);
  }
}
