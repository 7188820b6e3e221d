#pragma once

#include <json.hpp>

#include "raag1d/actions.hpp"
#include "raag1d/cotree.hpp"
#include "raag1d/graph.hpp"
#include "raag1d/pl_map.hpp"
#include "raag1d/rotation.hpp"

namespace raag1d {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Rationals always travel as "p/q" (or "p") strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"domain": "I" | "S1", "points": [["x","y"], ...]}
Json to_json(const PLMap& f);
PLMap pl_map_from_json(const Json& j);

Json to_json(const PointSet& s);

// {"vertices": [...], "edges": [[u, v], ...]}
Json to_json(const SimplicialGraph& g);
SimplicialGraph graph_from_json(const Json& j);

// Leaves are vertex names; internal nodes are ["join" | "union", child...].
Json to_json(const Cotree& t);

Json to_json(const SmoothabilityVerdict& v);
Json to_json(const SimplicialGraph& g, const EmbeddingWitness& w);

// Versioned document {version, graph, cograph, cotree, level, p4, verdict,
// witness}. `witness` is null when the graph is C^{1+bv}-smoothable.
Json classification_document(const SimplicialGraph& g);

Json to_json(const RotationNumber& r);

// {version, a, b, t, x0, words, witnesses}
Json to_json(const ActionAssignment& asg);
ActionAssignment assignment_from_json(const Json& j);

}  // namespace raag1d
