#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "raag1d/cotree.hpp"
#include "raag1d/errors.hpp"

using namespace raag1d;

namespace {

SimplicialGraph p3_plus_point() { return SimplicialGraph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}}); }

// Order-independent rendering: children sorted by their own rendering.
std::string shape(const Cotree& t) {
  if (t.kind() == Cotree::Kind::Leaf) return "L";
  std::vector<std::string> kids;
  for (const auto& c : t.children()) kids.push_back(shape(c));
  std::sort(kids.begin(), kids.end());
  std::string out = t.kind() == Cotree::Kind::Join ? "J(" : "U(";
  for (const auto& k : kids) out += k + ",";
  return out + ")";
}

bool same_graph_by_name(const SimplicialGraph& a, const SimplicialGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (const auto& u : a.vertices()) {
    if (!b.index_of(u)) return false;
    for (const auto& v : a.vertices())
      if (u != v && a.adjacent(u, v) != b.adjacent(u, v)) return false;
  }
  return true;
}

// Random cograph from a random expression over n fresh vertices.
SimplicialGraph random_cograph(std::mt19937_64& rng, std::size_t n, std::size_t& next_name) {
  if (n == 1) return SimplicialGraph({"v" + std::to_string(next_name++)}, {});
  const std::size_t k = 1 + rng() % (n - 1);
  auto left = random_cograph(rng, k, next_name);
  auto right = random_cograph(rng, n - k, next_name);
  return rng() % 2 ? join(left, right) : disjoint_union(left, right);
}

}  // namespace

TEST_SUITE("cotree") {
  TEST_CASE("decompose examples") {
    const auto k3 = decompose(families::complete(3));
    REQUIRE(std::holds_alternative<Cotree>(k3));
    CHECK(shape(std::get<Cotree>(k3)) == "J(L,L,L,)");

    const auto p4 = decompose(families::path(4));
    REQUIRE(std::holds_alternative<NotCograph>(p4));
    CHECK(std::get<NotCograph>(p4).p4 == std::array<VertexIndex, 4>{0, 1, 2, 3});

    // Union(Join(Leaf, Union(Leaf, Leaf)), Leaf) up to child order.
    const auto q = decompose(p3_plus_point());
    REQUIRE(std::holds_alternative<Cotree>(q));
    const Cotree expected = Cotree::disjoint_union(
        {Cotree::join({Cotree::leaf("2"), Cotree::disjoint_union({Cotree::leaf("1"), Cotree::leaf("3")})}),
         Cotree::leaf("4")});
    CHECK(shape(std::get<Cotree>(q)) == shape(expected));
    CHECK(to_string(std::get<Cotree>(q)) == "union(join(union(1, 3), 2), 4)");

    CHECK_THROWS_AS(decompose(SimplicialGraph()), EmptyGraph);
  }

  TEST_CASE("cotree constructor invariants") {
    CHECK_THROWS_AS(Cotree::join({Cotree::leaf("a")}), GraphError);
    CHECK_THROWS_AS(Cotree::join({Cotree::join({Cotree::leaf("a"), Cotree::leaf("b")}), Cotree::leaf("c")}),
                    GraphError);
    CHECK_THROWS_AS(
        Cotree::disjoint_union({Cotree::disjoint_union({Cotree::leaf("a"), Cotree::leaf("b")}), Cotree::leaf("c")}),
        GraphError);
  }

  TEST_CASE("reconstruct examples") {
    const auto pt = reconstruct(Cotree::leaf("v"));
    CHECK(pt.order() == 1);
    const auto edge = reconstruct(Cotree::join({Cotree::leaf("a"), Cotree::leaf("b")}));
    CHECK(edge.order() == 2);
    CHECK(edge.size() == 1);
    const auto ep = reconstruct(
        Cotree::disjoint_union({Cotree::join({Cotree::leaf("a"), Cotree::leaf("b")}), Cotree::leaf("c")}));
    CHECK(ep.order() == 3);
    CHECK(ep.size() == 1);
    CHECK(ep.adjacent("a", "b"));
  }

  TEST_CASE("roundtrip on random cographs up to 9 vertices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t next = 0;
      const auto g = random_cograph(rng, 1 + rng() % 9, next);
      const auto d = decompose(g);
      REQUIRE(std::holds_alternative<Cotree>(d));
      const Cotree& t = std::get<Cotree>(d);
      CHECK(t.leaf_count() == g.order());
      CHECK(same_graph_by_name(reconstruct(t), g));
    }
  }

  TEST_CASE("hierarchy level examples") {
    CHECK(hierarchy_level(Cotree::leaf("v")) == 0);
    CHECK(hierarchy_level(Cotree::join({Cotree::leaf("a"), Cotree::leaf("b")})) == 1);
    CHECK(hierarchy_level(families::path(3)).level == 3u);
    CHECK(hierarchy_level(p3_plus_point()).level == 4u);
    // Same values from the inductive definition.
    CHECK(oracle::kn_level(families::complete(2)) == 1u);
    CHECK(oracle::kn_level(p3_plus_point()) == 4u);
    CHECK(oracle::kn_level(families::path(3)) == 3u);
    CHECK(!oracle::kn_level(families::path(4)).has_value());
    const auto nc = hierarchy_level(families::path(4));
    CHECK(!nc.is_cograph());
    CHECK(nc.p4.has_value());
  }

  TEST_CASE("level agrees with the inductive definition on every labelled graph up to 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& g : oracle::all_labelled_graphs(n)) {
        const auto lvl = hierarchy_level(g);
        REQUIRE(lvl.level == oracle::kn_level(g));
        REQUIRE(std::holds_alternative<NotCograph>(decompose(g)) == find_full_p4(g).has_value());
      }
  }

  TEST_CASE("hereditarity on cographs up to 7 vertices") {
    for (const auto& g : oracle::graphs_up_to_isomorphism(7)) {
      const auto top = hierarchy_level(g);
      if (!top.is_cograph()) continue;
      const std::size_t n = g.order();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<VertexIndex> s;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(i);
        const auto sub = hierarchy_level(full_subgraph_by_index(g, s));
        REQUIRE(sub.is_cograph());
        REQUIRE(*sub.level <= *top.level);
      }
    }
  }

  TEST_CASE("classification examples") {
    const auto p4 = classify(families::path(4));
    CHECK(p4.c1);
    CHECK(!p4.c1bv);
    CHECK(!p4.c_infinity);
    CHECK(!p4.c_omega);
    CHECK(p4.circle_class == CircleClass::NoFaithfulC1bv);

    const auto k5 = classify(families::complete(5));
    CHECK(k5.c1);
    CHECK(k5.c1bv);
    CHECK(k5.c_infinity);
    CHECK(k5.c_omega);
    CHECK(k5.circle_class == CircleClass::UncountableProjective);

    const auto p3 = classify(families::path(3));
    CHECK(p3.c1);
    CHECK(p3.c1bv);
    CHECK(p3.c_infinity);
    CHECK(!p3.c_omega);
    CHECK(p3.circle_class == CircleClass::CountableWithFiniteOrbit);

    CHECK_THROWS_AS(classify(SimplicialGraph()), EmptyGraph);
  }

  TEST_CASE("verdict lattice") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& g : oracle::all_labelled_graphs(n)) {
        const auto v = classify(g);
        REQUIRE(v.c1);
        REQUIRE(v.c_infinity == v.c1bv);
        if (v.c_omega) REQUIRE(v.c_infinity);
        const auto lvl = oracle::kn_level(g);
        REQUIRE(v.c1bv == (lvl && *lvl <= 3));
        REQUIRE(v.c_omega == (lvl && *lvl <= 2));
      }
  }

  TEST_CASE("witness examples") {
    const auto w = witness(families::path(4));
    CHECK(w.kind == EmbeddingWitness::Kind::P4);
    CHECK(w.words == std::array<std::string, 4>{"1", "2", "3", "4 1 4^-1"});

    const auto q = witness(p3_plus_point());
    CHECK(q.kind == EmbeddingWitness::Kind::P3PlusPoint);
    CHECK(q.vertices == std::array<VertexIndex, 4>{0, 1, 2, 3});

    CHECK_THROWS_AS(witness(families::complete(3)), NotApplicable);
    CHECK_THROWS_AS(witness(families::path(3)), NotApplicable);
  }

  // Words over x1..x4 (and inverses) in A(P3 + pt), with x2 central, are
  // sent to A(g) by the witness words. Triviality must be preserved in both
  // directions for every freely reduced word of the given length.
  void check_witness_soundness(const SimplicialGraph& g, std::size_t max_len) {
    const auto w = witness(g);
    REQUIRE(w.kind == EmbeddingWitness::Kind::P4);
    const auto [a, b, c, d] = w.vertices;
    using oracle::Letter;
    const std::vector<std::vector<Letter>> images{
        {{static_cast<int>(a), 1}},
        {{static_cast<int>(b), 1}},
        {{static_cast<int>(c), 1}},
        {{static_cast<int>(d), 1}, {static_cast<int>(a), 1}, {static_cast<int>(d), -1}}};
    std::vector<std::vector<bool>> source(4, std::vector<bool>(4, false));
    source[0][1] = source[1][0] = source[1][2] = source[2][1] = true;
    std::vector<std::vector<bool>> target(g.order(), std::vector<bool>(g.order(), false));
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) target[i][j] = g.adjacent(i, j);

    std::size_t checked = 0, mismatches = 0;
    std::vector<Letter> word;
    std::function<void()> extend = [&] {
      if (!word.empty()) {
        std::vector<Letter> image;
        for (const auto& x : word) {
          const auto& img = images[x.gen];
          if (x.sign > 0)
            image.insert(image.end(), img.begin(), img.end());
          else
            for (auto it = img.rbegin(); it != img.rend(); ++it) image.push_back({it->gen, -it->sign});
        }
        ++checked;
        if (oracle::raag_word_is_trivial(word, source) != oracle::raag_word_is_trivial(image, target)) ++mismatches;
      }
      if (word.size() == max_len) return;
      for (int gen = 0; gen < 4; ++gen)
        for (int sign : {1, -1}) {
          if (!word.empty() && word.back().gen == gen && word.back().sign == -sign) continue;
          word.push_back({gen, sign});
          extend();
          word.pop_back();
        }
    };
    extend();
    CHECK(checked > 0);
    CHECK(mismatches == 0);
  }

  TEST_CASE("P4 witness words generate the free product pattern (words up to 7 letters)") {
    check_witness_soundness(families::path(4), 7);
  }

  TEST_CASE("witness inside larger graphs (words up to 5 letters)") {
    check_witness_soundness(families::cycle(5), 5);
    check_witness_soundness(families::path(6), 5);
  }

  TEST_CASE("RAAG reducer sanity") {
    using oracle::Letter;
    // In A(P4) = <1,2,3,4>, [1,2] = 1 but [1,3] != 1.
    const auto p4 = families::path(4);
    std::vector<std::vector<bool>> adj(4, std::vector<bool>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) adj[i][j] = p4.adjacent(i, j);
    CHECK(oracle::raag_word_is_trivial({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, adj));
    CHECK(!oracle::raag_word_is_trivial({{0, 1}, {2, 1}, {0, -1}, {2, -1}}, adj));
    CHECK(oracle::raag_word_is_trivial({{0, 1}, {1, 1}, {1, -1}, {0, -1}}, adj));
  }
}
