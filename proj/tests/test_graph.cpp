#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "raag1d/errors.hpp"
#include "raag1d/graph.hpp"

using namespace raag1d;

namespace {

SimplicialGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 100 < percent) edges.emplace_back(i, j);
  std::vector<VertexId> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return SimplicialGraph::from_indices(names, edges);
}

// Induced subgraph straight from the adjacency predicate.
bool is_induced_on(const SimplicialGraph& sub, const SimplicialGraph& g, const std::vector<VertexId>& s) {
  if (sub.vertices() != s) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && sub.adjacent(s[i], s[j]) != g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("constructor invariants") {
    CHECK_THROWS_AS(SimplicialGraph({"a"}, {{"a", "a"}}), GraphError);
    CHECK_THROWS_AS(SimplicialGraph({"a"}, {{"a", "b"}}), GraphError);
    CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {}), GraphError);
    SimplicialGraph g({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(g.size() == 1);
  }

  TEST_CASE("full_subgraph examples") {
    const auto p4 = families::path(4);
    const std::vector<VertexId> s12{"1", "2"};
    const auto e = full_subgraph(p4, s12);
    CHECK(e.order() == 2);
    CHECK(e.size() == 1);

    const auto c5 = families::cycle(5);
    const std::vector<VertexId> s{"1", "2", "3", "4"};
    const auto sub = full_subgraph(c5, s);
    CHECK(is_induced_on(sub, c5, s));
    CHECK(sub == families::path(4));

    const auto empty = full_subgraph(c5, std::vector<VertexId>{});
    CHECK(empty.order() == 0);
    CHECK(empty.size() == 0);

    CHECK_THROWS_AS(full_subgraph(c5, std::vector<VertexId>{"9"}), GraphError);
  }

  TEST_CASE("full_subgraph is induced and idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = random_graph(rng, 1 + rng() % 9, 50);
      std::vector<VertexId> s;
      for (const auto& v : g.vertices())
        if (rng() % 2) s.push_back(v);
      const auto sub = full_subgraph(g, s);
      CHECK(is_induced_on(sub, g, s));
      CHECK(full_subgraph(sub, s) == sub);
    }
  }

  TEST_CASE("join and disjoint union") {
    const auto pt = families::edgeless(1);
    const auto e = join(pt, pt);
    CHECK(e.order() == 2);
    CHECK(e.size() == 1);
    CHECK(e.vertices() == std::vector<VertexId>{"1", "g2/1"});
    const auto two = disjoint_union(pt, pt);
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    // Joining a point to two isolated points gives a path on three vertices
    // centred at the point.
    const auto p3 = join(pt, families::edgeless(2));
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent("1", "g2/1"));
    CHECK(p3.adjacent("1", "2"));
    CHECK(!p3.adjacent("g2/1", "2"));
    CHECK(find_full_p3(p3).has_value());

    // Renaming repeats until the name is free.
    const SimplicialGraph g1({"x", "g2/x"}, {});
    const SimplicialGraph g2({"x"}, {});
    CHECK(disjoint_union(g1, g2).vertices() == std::vector<VertexId>{"x", "g2/x", "g2/g2/x"});
  }

  TEST_CASE("join edge count formula") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g1 = random_graph(rng, 1 + rng() % 6, 40);
      const auto g2 = random_graph(rng, 1 + rng() % 6, 40);
      const auto j = join(g1, g2);
      const auto u = disjoint_union(g1, g2);
      CHECK(j.order() == g1.order() + g2.order());
      CHECK(j.size() == g1.size() + g2.size() + g1.order() * g2.order());
      CHECK(u.size() == g1.size() + g2.size());
    }
  }

  TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = random_graph(rng, 1 + rng() % 8, 50);
      const auto c = complement(g);
      CHECK(c.size() + g.size() == g.order() * (g.order() - 1) / 2);
      CHECK(complement(c) == g);
    }
  }

  TEST_CASE("pattern search examples") {
    CHECK(find_full_p4(families::path(4)) == std::array<VertexIndex, 4>{0, 1, 2, 3});
    CHECK(!find_full_p4(families::complete(4)).has_value());
    const auto c5 = families::cycle(5);
    REQUIRE(find_full_p4(c5).has_value());
    CHECK(find_full_p4(c5) == oracle::induced_p4(c5));

    CHECK(find_full_p3(families::path(3)) == std::array<VertexIndex, 3>{0, 1, 2});
    CHECK(!find_full_p3(families::complete(3)).has_value());
    REQUIRE(find_full_p3(families::path(4)).has_value());
    CHECK(find_full_p3(families::path(4)) == oracle::induced_p3(families::path(4)));
  }

  TEST_CASE("pattern searches agree with brute force on every graph on 5 vertices") {
    for (const auto& g : oracle::all_labelled_graphs(5)) {
      REQUIRE(find_full_p4(g) == oracle::induced_p4(g));
      REQUIRE(find_full_p3(g) == oracle::induced_p3(g));
      REQUIRE(find_full_p3(g).has_value() == !oracle::is_union_of_cliques(g));
    }
  }

  TEST_CASE("pattern searches agree with brute force on random graphs up to 9 vertices") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = random_graph(rng, 1 + rng() % 9, static_cast<unsigned>(10 + rng() % 80));
      REQUIRE(find_full_p4(g) == oracle::induced_p4(g));
      REQUIRE(find_full_p3(g) == oracle::induced_p3(g));
      REQUIRE(find_full_p3(g).has_value() == !oracle::is_union_of_cliques(g));
    }
  }

  TEST_CASE("P3 plus point search") {
    const SimplicialGraph g({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}});
    CHECK(find_full_p3_plus_point(g) == std::array<VertexIndex, 4>{0, 1, 2, 3});
    CHECK(!find_full_p3_plus_point(families::path(4)).has_value());
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = random_graph(rng, 1 + rng() % 7, 40);
      if (auto q = find_full_p3_plus_point(h)) {
        const auto [a, b, c, e] = *q;
        CHECK(h.adjacent(a, b));
        CHECK(h.adjacent(b, c));
        CHECK(!h.adjacent(a, c));
        CHECK(!h.adjacent(a, e));
        CHECK(!h.adjacent(b, e));
        CHECK(!h.adjacent(c, e));
      }
    }
  }

  TEST_CASE("connected components") {
    const SimplicialGraph g({"1", "2", "3", "4", "5"}, {{"1", "3"}, {"4", "5"}});
    const auto cc = connected_components(g);
    REQUIRE(cc.size() == 3);
    CHECK(cc[0] == std::vector<VertexIndex>{0, 2});
    CHECK(cc[1] == std::vector<VertexIndex>{1});
    CHECK(cc[2] == std::vector<VertexIndex>{3, 4});
  }
}
