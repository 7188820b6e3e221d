#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag1d {

using VertexId = std::string;
using VertexIndex = std::size_t;

// Finite loopless undirected graph on opaque string vertex identifiers.
// Vertex order is the order of declaration and is significant: pattern
// searches report the lexicographically least witness under it.
// Immutable after construction.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  // Throws GraphError on a self-loop, an edge naming an undeclared vertex,
  // or a repeated vertex identifier. Repeated edges collapse to one.
  SimplicialGraph(std::vector<VertexId> vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges);

  static SimplicialGraph from_indices(std::vector<VertexId> vertices,
                                      std::span<const std::pair<VertexIndex, VertexIndex>> edges);

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return vertices_.empty(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex(VertexIndex i) const { return vertices_[i]; }
  std::optional<VertexIndex> index_of(const VertexId& v) const;

  bool adjacent(VertexIndex i, VertexIndex j) const { return adj_[i * vertices_.size() + j] != 0; }
  bool adjacent(const VertexId& u, const VertexId& v) const;

  // Edges as index pairs (i < j), sorted lexicographically.
  std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;
  std::vector<VertexIndex> neighbours(VertexIndex i) const;

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b);

 private:
  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, VertexIndex> index_;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;

  void init_vertices(std::vector<VertexId> vertices);
  void connect(VertexIndex i, VertexIndex j);
};

// Induced subgraph on `subset`, keeping the ambient vertex order.
// Throws GraphError on an unknown vertex.
SimplicialGraph full_subgraph(const SimplicialGraph& g, std::span<const VertexId> subset);
SimplicialGraph full_subgraph_by_index(const SimplicialGraph& g, std::span<const VertexIndex> subset);

// Colliding identifiers of the second operand are renamed with a "g2/" prefix
// (repeated until unique).
SimplicialGraph join(const SimplicialGraph& g1, const SimplicialGraph& g2);
SimplicialGraph disjoint_union(const SimplicialGraph& g1, const SimplicialGraph& g2);

SimplicialGraph complement(const SimplicialGraph& g);

// Connected components as sorted index lists, ordered by least member.
std::vector<std::vector<VertexIndex>> connected_components(const SimplicialGraph& g);

// Lexicographically least (a,b,c,d) spanning an induced path a-b-c-d.
std::optional<std::array<VertexIndex, 4>> find_full_p4(const SimplicialGraph& g);

// Lexicographically least (a,b,c) spanning an induced path a-b-c.
std::optional<std::array<VertexIndex, 3>> find_full_p3(const SimplicialGraph& g);

// Lexicographically least (a,b,c,e): induced path a-b-c plus a vertex e
// adjacent to none of them.
std::optional<std::array<VertexIndex, 4>> find_full_p3_plus_point(const SimplicialGraph& g);

// Small named families used by tests, the CLI and the acceptance suite.
// Vertices are "1".."n".
namespace families {
SimplicialGraph path(std::size_t n);
SimplicialGraph cycle(std::size_t n);
SimplicialGraph complete(std::size_t n);
SimplicialGraph edgeless(std::size_t n);
}  // namespace families

}  // namespace raag1d
