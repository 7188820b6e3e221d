#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "raag1d/graph.hpp"

namespace raag1d {

// Join/union decomposition tree of a cograph. Internal nodes have at least
// two children and kinds alternate along every root-to-leaf path.
class Cotree {
 public:
  enum class Kind { Leaf, Join, Union };

  static Cotree leaf(VertexId v);
  // Throws GraphError unless the children are at least two and none has the
  // same kind as the new node.
  static Cotree join(std::vector<Cotree> children);
  static Cotree disjoint_union(std::vector<Cotree> children);

  Kind kind() const { return kind_; }
  const VertexId& vertex() const { return vertex_; }
  const std::vector<Cotree>& children() const { return children_; }

  std::size_t leaf_count() const;
  std::vector<VertexId> leaves() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;

 private:
  Kind kind_ = Kind::Leaf;
  VertexId vertex_;
  std::vector<Cotree> children_;
};

struct NotCograph {
  std::array<VertexIndex, 4> p4;
};

using Decomposition = std::variant<Cotree, NotCograph>;

// Splits on connected components and co-components. Children are ordered by
// their least vertex index. Throws EmptyGraph.
Decomposition decompose(const SimplicialGraph& g);

SimplicialGraph reconstruct(const Cotree& t);

// Least n with the graph in K_n: leaves sit at 0, a join lifts its deepest
// child to the next odd level, a union to the next even level.
unsigned hierarchy_level(const Cotree& t);

struct HierarchyLevel {
  std::optional<unsigned> level;              // set iff cograph
  std::optional<std::array<VertexIndex, 4>> p4;  // set iff not a cograph
  bool is_cograph() const { return level.has_value(); }
};

HierarchyLevel hierarchy_level(const SimplicialGraph& g);

enum class CircleClass { UncountableProjective, CountableWithFiniteOrbit, NoFaithfulC1bv };

std::string_view to_string(CircleClass c);

struct SmoothabilityVerdict {
  bool c1 = true;
  bool c1bv = false;
  bool c_infinity = false;
  bool c_omega = false;
  CircleClass circle_class = CircleClass::NoFaithfulC1bv;

  friend bool operator==(const SmoothabilityVerdict&, const SmoothabilityVerdict&) = default;
};

SmoothabilityVerdict verdict_for(const HierarchyLevel& level);
SmoothabilityVerdict classify(const SimplicialGraph& g);

// Subgroup witness for (F2 x Z) * Z inside A(g).
struct EmbeddingWitness {
  enum class Kind { P4, P3PlusPoint } kind;
  // P4: path a-b-c-d. P3PlusPoint: path a-b-c and an isolated e.
  std::array<VertexIndex, 4> vertices;
  // Generator words in the RAAG alphabet, e.g. "a", "d a d^-1".
  std::array<std::string, 4> words;
};

// Throws NotApplicable when A(g) admits a faithful C^{1+bv} action.
EmbeddingWitness witness(const SimplicialGraph& g);

// Cotree rendered as nested lists: leaves are vertex names, internal nodes
// are ("join" | "union", children...). Used by text output.
std::string to_string(const Cotree& t);

}  // namespace raag1d
