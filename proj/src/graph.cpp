#include "raag1d/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "raag1d/errors.hpp"

namespace raag1d {

void SimplicialGraph::init_vertices(std::vector<VertexId> vertices) {
  vertices_ = std::move(vertices);
  index_.clear();
  index_.reserve(vertices_.size());
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw GraphError("duplicate vertex '" + vertices_[i] + "'");
  }
  adj_.assign(vertices_.size() * vertices_.size(), 0);
  edge_count_ = 0;
}

void SimplicialGraph::connect(VertexIndex i, VertexIndex j) {
  if (i == j) throw GraphError("self-loop at '" + vertices_[i] + "'");
  const std::size_t n = vertices_.size();
  if (adj_[i * n + j]) return;
  adj_[i * n + j] = adj_[j * n + i] = 1;
  ++edge_count_;
}

SimplicialGraph::SimplicialGraph(std::vector<VertexId> vertices,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges) {
  init_vertices(std::move(vertices));
  for (const auto& [u, v] : edges) {
    auto iu = index_of(u);
    auto iv = index_of(v);
    if (!iu) throw GraphError("edge endpoint '" + u + "' is not a vertex");
    if (!iv) throw GraphError("edge endpoint '" + v + "' is not a vertex");
    connect(*iu, *iv);
  }
}

SimplicialGraph SimplicialGraph::from_indices(
    std::vector<VertexId> vertices, std::span<const std::pair<VertexIndex, VertexIndex>> edges) {
  SimplicialGraph g;
  g.init_vertices(std::move(vertices));
  for (const auto& [i, j] : edges) {
    if (i >= g.order() || j >= g.order()) throw GraphError("edge index out of range");
    g.connect(i, j);
  }
  return g;
}

std::optional<VertexIndex> SimplicialGraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialGraph::adjacent(const VertexId& u, const VertexId& v) const {
  auto iu = index_of(u);
  auto iv = index_of(v);
  return iu && iv && adjacent(*iu, *iv);
}

std::vector<std::pair<VertexIndex, VertexIndex>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  out.reserve(edge_count_);
  for (VertexIndex i = 0; i < order(); ++i)
    for (VertexIndex j = i + 1; j < order(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<VertexIndex> SimplicialGraph::neighbours(VertexIndex i) const {
  std::vector<VertexIndex> out;
  for (VertexIndex j = 0; j < order(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
  return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
}

SimplicialGraph full_subgraph_by_index(const SimplicialGraph& g, std::span<const VertexIndex> subset) {
  std::vector<VertexIndex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<VertexId> names;
  names.reserve(keep.size());
  for (VertexIndex i : keep) {
    if (i >= g.order()) throw GraphError("vertex index out of range");
    names.push_back(g.vertex(i));
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.adjacent(keep[a], keep[b])) edges.emplace_back(a, b);
  return SimplicialGraph::from_indices(std::move(names), edges);
}

SimplicialGraph full_subgraph(const SimplicialGraph& g, std::span<const VertexId> subset) {
  std::vector<VertexIndex> idx;
  idx.reserve(subset.size());
  for (const auto& v : subset) {
    auto i = g.index_of(v);
    if (!i) throw GraphError("unknown vertex '" + v + "'");
    idx.push_back(*i);
  }
  return full_subgraph_by_index(g, idx);
}

namespace {

SimplicialGraph combine(const SimplicialGraph& g1, const SimplicialGraph& g2, bool cross_edges) {
  std::vector<VertexId> names = g1.vertices();
  std::unordered_set<VertexId> taken(names.begin(), names.end());
  for (const auto& v : g2.vertices()) {
    VertexId name = v;
    while (taken.count(name)) name = "g2/" + name;
    taken.insert(name);
    names.push_back(std::move(name));
  }
  const std::size_t off = g1.order();
  std::vector<std::pair<VertexIndex, VertexIndex>> edges = g1.edges();
  for (auto [i, j] : g2.edges()) edges.emplace_back(i + off, j + off);
  if (cross_edges)
    for (VertexIndex i = 0; i < g1.order(); ++i)
      for (VertexIndex j = 0; j < g2.order(); ++j) edges.emplace_back(i, j + off);
  return SimplicialGraph::from_indices(std::move(names), edges);
}

}  // namespace

SimplicialGraph join(const SimplicialGraph& g1, const SimplicialGraph& g2) {
  return combine(g1, g2, true);
}

SimplicialGraph disjoint_union(const SimplicialGraph& g1, const SimplicialGraph& g2) {
  return combine(g1, g2, false);
}

SimplicialGraph complement(const SimplicialGraph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex i = 0; i < g.order(); ++i)
    for (VertexIndex j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return SimplicialGraph::from_indices(g.vertices(), edges);
}

std::vector<std::vector<VertexIndex>> connected_components(const SimplicialGraph& g) {
  std::vector<std::vector<VertexIndex>> out;
  std::vector<bool> seen(g.order(), false);
  for (VertexIndex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexIndex> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (VertexIndex j = 0; j < g.order(); ++j)
        if (!seen[j] && g.adjacent(comp[k], j)) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// The searches below walk candidate tuples in lexicographic order and stop at
// the first hit, so the hit is the least witness.

std::optional<std::array<VertexIndex, 4>> find_full_p4(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexIndex c = 0; c < n; ++c) {
        if (c == a || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (VertexIndex d = 0; d < n; ++d) {
          if (d == a || d == b || !g.adjacent(c, d)) continue;
          if (g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return std::array<VertexIndex, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

std::optional<std::array<VertexIndex, 3>> find_full_p3(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexIndex c = 0; c < n; ++c)
        if (c != a && g.adjacent(b, c) && !g.adjacent(a, c)) return std::array<VertexIndex, 3>{a, b, c};
    }
  return std::nullopt;
}

std::optional<std::array<VertexIndex, 4>> find_full_p3_plus_point(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexIndex c = 0; c < n; ++c) {
        if (c == a || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (VertexIndex e = 0; e < n; ++e) {
          if (e == a || e == b || e == c) continue;
          if (g.adjacent(a, e) || g.adjacent(b, e) || g.adjacent(c, e)) continue;
          return std::array<VertexIndex, 4>{a, b, c, e};
        }
      }
    }
  return std::nullopt;
}

namespace families {

namespace {
std::vector<VertexId> numbered(std::size_t n) {
  std::vector<VertexId> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}
}  // namespace

SimplicialGraph path(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimplicialGraph::from_indices(numbered(n), e);
}

SimplicialGraph cycle(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return SimplicialGraph::from_indices(numbered(n), e);
}

SimplicialGraph complete(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimplicialGraph::from_indices(numbered(n), e);
}

SimplicialGraph edgeless(std::size_t n) {
  return SimplicialGraph::from_indices(numbered(n), {});
}

}  // namespace families

}  // namespace raag1d
