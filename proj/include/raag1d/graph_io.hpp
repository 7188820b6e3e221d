#pragma once

#include <string>
#include <string_view>

#include "raag1d/graph.hpp"

namespace raag1d {

enum class GraphFormat { EdgeList, Dot };

// Edge-list text: one "u v" pair per line, "vertex u" declares an isolated
// vertex, '#' starts a comment. Vertices are ordered by first appearance.
SimplicialGraph parse_edge_list(std::string_view text);

// Undirected DOT subset: `[strict] graph [name] { ... }` with node statements
// `u;` and edge chains `u -- v -- w;`. Attributes are rejected.
SimplicialGraph parse_dot(std::string_view text);

// Picks DOT when the first token is `graph` or `strict`, else edge-list.
GraphFormat detect_graph_format(std::string_view text);
SimplicialGraph parse_graph(std::string_view text);

std::string write_edge_list(const SimplicialGraph& g);
std::string write_dot(const SimplicialGraph& g, std::string_view name = "G");

}  // namespace raag1d
