#pragma once

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "raag1d/graph.hpp"
#include "raag1d/pl_map.hpp"

namespace oracle {

using raag1d::SimplicialGraph;

// Every 4-subset in every order, compared against the P4 adjacency pattern.
// Returns the lexicographically least ordered witness.
std::optional<std::array<std::size_t, 4>> induced_p4(const SimplicialGraph& g);
std::optional<std::array<std::size_t, 3>> induced_p3(const SimplicialGraph& g);

// Adjacency is an equivalence relation on each component.
bool is_union_of_cliques(const SimplicialGraph& g);

// Least n with g in K_n, straight from the inductive definition over vertex
// bitmasks (graphs on at most 16 vertices). nullopt when g is in no K_n.
std::optional<unsigned> kn_level(const SimplicialGraph& g);

// One representative per isomorphism class of graphs on n <= 7 vertices,
// vertices named "1".."n".
std::vector<SimplicialGraph> graphs_up_to_isomorphism(std::size_t n);

// Every labelled graph on n vertices (n <= 6).
std::vector<SimplicialGraph> all_labelled_graphs(std::size_t n);

// Word problem in a right-angled Artin group. Letters are (generator, +-1);
// `commute[i][j]` is the defining graph adjacency.
struct Letter {
  int gen;
  int sign;
};
bool raag_word_is_trivial(const std::vector<Letter>& word, const std::vector<std::vector<bool>>& commute);

// Slope variation from a uniform grid of step 1/(L * refine), L the lcm of
// the breakpoint denominators. Slopes are difference quotients of f itself,
// so only the grid choice looks at the breakpoints. Cyclic on the circle.
raag1d::Rational variation_by_refinement(const raag1d::PLMap& f, unsigned refine);

}  // namespace oracle
