#include "raag1d/cotree.hpp"

#include <algorithm>

#include "raag1d/errors.hpp"

namespace raag1d {

Cotree Cotree::leaf(VertexId v) {
  Cotree t;
  t.kind_ = Kind::Leaf;
  t.vertex_ = std::move(v);
  return t;
}

namespace {

Cotree::Kind check_children(Cotree::Kind kind, const std::vector<Cotree>& children) {
  if (children.size() < 2) throw GraphError("cotree node needs at least two children");
  for (const auto& c : children)
    if (c.kind() == kind) throw GraphError("cotree children must alternate kinds");
  return kind;
}

}  // namespace

Cotree Cotree::join(std::vector<Cotree> children) {
  Cotree t;
  t.kind_ = check_children(Kind::Join, children);
  t.children_ = std::move(children);
  return t;
}

Cotree Cotree::disjoint_union(std::vector<Cotree> children) {
  Cotree t;
  t.kind_ = check_children(Kind::Union, children);
  t.children_ = std::move(children);
  return t;
}

std::size_t Cotree::leaf_count() const {
  if (kind_ == Kind::Leaf) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

std::vector<VertexId> Cotree::leaves() const {
  if (kind_ == Kind::Leaf) return {vertex_};
  std::vector<VertexId> out;
  for (const auto& c : children_) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

namespace {

// Components of the subgraph induced on `subset`, or of its complement when
// `co` is set. Each part is sorted; parts are ordered by least member.
std::vector<std::vector<VertexIndex>> split(const SimplicialGraph& g, const std::vector<VertexIndex>& subset,
                                            bool co) {
  std::vector<std::vector<VertexIndex>> parts;
  std::vector<bool> seen(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t j = 0; j < subset.size(); ++j)
        if (!seen[j] && g.adjacent(subset[queue[k]], subset[j]) != co) {
          seen[j] = true;
          queue.push_back(j);
        }
    std::vector<VertexIndex> part;
    for (auto q : queue) part.push_back(subset[q]);
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::optional<Cotree> decompose_subset(const SimplicialGraph& g, const std::vector<VertexIndex>& subset) {
  if (subset.size() == 1) return Cotree::leaf(g.vertex(subset.front()));
  for (bool co : {false, true}) {
    auto parts = split(g, subset, co);
    if (parts.size() < 2) continue;
    std::vector<Cotree> children;
    for (const auto& p : parts) {
      auto child = decompose_subset(g, p);
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    return co ? Cotree::join(std::move(children)) : Cotree::disjoint_union(std::move(children));
  }
  // Connected with connected complement on >= 2 vertices: contains a P4.
  return std::nullopt;
}

}  // namespace

Decomposition decompose(const SimplicialGraph& g) {
  if (g.empty()) throw EmptyGraph();
  std::vector<VertexIndex> all(g.order());
  for (VertexIndex i = 0; i < g.order(); ++i) all[i] = i;
  if (auto t = decompose_subset(g, all)) return std::move(*t);
  auto p4 = find_full_p4(g);
  if (!p4) throw Error("internal: prime node without an induced P4");
  return NotCograph{*p4};
}

namespace {

SimplicialGraph reconstruct_node(const Cotree& t) {
  if (t.kind() == Cotree::Kind::Leaf) return SimplicialGraph({t.vertex()}, {});
  SimplicialGraph acc = reconstruct_node(t.children().front());
  for (std::size_t i = 1; i < t.children().size(); ++i) {
    SimplicialGraph next = reconstruct_node(t.children()[i]);
    acc = t.kind() == Cotree::Kind::Join ? join(acc, next) : disjoint_union(acc, next);
  }
  return acc;
}

}  // namespace

SimplicialGraph reconstruct(const Cotree& t) { return reconstruct_node(t); }

unsigned hierarchy_level(const Cotree& t) {
  if (t.kind() == Cotree::Kind::Leaf) return 0;
  unsigned deepest = 0;
  for (const auto& c : t.children()) deepest = std::max(deepest, hierarchy_level(c));
  unsigned n = deepest + 1;
  const bool want_odd = t.kind() == Cotree::Kind::Join;
  if ((n % 2 == 1) != want_odd) ++n;
  return n;
}

HierarchyLevel hierarchy_level(const SimplicialGraph& g) {
  auto d = decompose(g);
  if (auto* nc = std::get_if<NotCograph>(&d)) return {std::nullopt, nc->p4};
  return {hierarchy_level(std::get<Cotree>(d)), std::nullopt};
}

std::string_view to_string(CircleClass c) {
  switch (c) {
    case CircleClass::UncountableProjective:
      return "UncountableProjective";
    case CircleClass::CountableWithFiniteOrbit:
      return "CountableWithFiniteOrbit";
    case CircleClass::NoFaithfulC1bv:
      return "NoFaithfulC1bv";
  }
  return "?";
}

SmoothabilityVerdict verdict_for(const HierarchyLevel& h) {
  SmoothabilityVerdict v;
  v.c1 = true;
  if (!h.level) return v;
  const unsigned n = *h.level;
  v.c1bv = v.c_infinity = n <= 3;
  v.c_omega = n <= 2;
  v.circle_class = n <= 2   ? CircleClass::UncountableProjective
                   : n == 3 ? CircleClass::CountableWithFiniteOrbit
                            : CircleClass::NoFaithfulC1bv;
  return v;
}

SmoothabilityVerdict classify(const SimplicialGraph& g) { return verdict_for(hierarchy_level(g)); }

EmbeddingWitness witness(const SimplicialGraph& g) {
  if (g.empty()) throw EmptyGraph();
  if (auto p4 = find_full_p4(g)) {
    const auto& [a, b, c, d] = *p4;
    const auto& da = g.vertex(d);
    return {EmbeddingWitness::Kind::P4,
            *p4,
            {g.vertex(a), g.vertex(b), g.vertex(c), da + " " + g.vertex(a) + " " + da + "^-1"}};
  }
  if (classify(g).c1bv) throw NotApplicable("graph lies in K_3; A(g) acts faithfully by C^{1+bv} diffeomorphisms");
  auto q = find_full_p3_plus_point(g);
  if (!q) throw Error("internal: cograph above K_3 without an induced P3 + point");
  return {EmbeddingWitness::Kind::P3PlusPoint,
          *q,
          {g.vertex((*q)[0]), g.vertex((*q)[1]), g.vertex((*q)[2]), g.vertex((*q)[3])}};
}

std::string to_string(const Cotree& t) {
  if (t.kind() == Cotree::Kind::Leaf) return t.vertex();
  std::string out = t.kind() == Cotree::Kind::Join ? "join(" : "union(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.children()[i]);
  }
  return out + ")";
}

}  // namespace raag1d
