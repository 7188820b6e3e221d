#include "raag1d/serialize.hpp"

#include "raag1d/errors.hpp"

namespace raag1d {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error("rational must be a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json to_json(const PLMap& f) {
  Json pts = Json::array();
  for (const auto& p : f.breakpoints()) pts.push_back(Json::array({to_json(p.x), to_json(p.y)}));
  return Json{{"domain", to_string(f.domain())}, {"points", std::move(pts)}};
}

PLMap pl_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("points"))
    throw Error("PL map needs \"domain\" and \"points\"");
  const std::string dom = j.at("domain").get<std::string>();
  Domain d;
  if (dom == "I")
    d = Domain::Interval;
  else if (dom == "S1")
    d = Domain::Circle;
  else
    throw Error("unknown domain \"" + dom + "\"");
  std::vector<Breakpoint> pts;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw Error("breakpoint must be a pair [x, y]");
    pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return PLMap(d, std::move(pts));
}

Json to_json(const PointSet& s) {
  Json out = Json::array();
  for (const auto& p : s.pieces())
    out.push_back(Json{{"lo", to_json(p.lo)},
                       {"hi", to_json(p.hi)},
                       {"lo_closed", p.lo_closed},
                       {"hi_closed", p.hi_closed}});
  return out;
}

Json to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back(Json::array({g.vertex(i), g.vertex(j)}));
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

SimplicialGraph graph_from_json(const Json& j) {
  std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return SimplicialGraph(std::move(vertices), edges);
}

Json to_json(const Cotree& t) {
  if (t.kind() == Cotree::Kind::Leaf) return t.vertex();
  Json out = Json::array({t.kind() == Cotree::Kind::Join ? "join" : "union"});
  for (const auto& c : t.children()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SmoothabilityVerdict& v) {
  return Json{{"c1", v.c1},
              {"c1bv", v.c1bv},
              {"c_infinity", v.c_infinity},
              {"c_omega", v.c_omega},
              {"circle_class", std::string(to_string(v.circle_class))}};
}

Json to_json(const SimplicialGraph& g, const EmbeddingWitness& w) {
  Json vertices = Json::array();
  for (auto i : w.vertices) vertices.push_back(g.vertex(i));
  return Json{{"kind", w.kind == EmbeddingWitness::Kind::P4 ? "P4" : "P3+point"},
              {"vertices", std::move(vertices)},
              {"words", w.words},
              {"subgroup", "(F2 x Z) * Z"}};
}

Json classification_document(const SimplicialGraph& g) {
  if (g.empty()) throw EmptyGraph();
  const auto decomposition = decompose(g);
  Json doc{{"version", kFormatVersion}, {"graph", to_json(g)}};
  HierarchyLevel level;
  if (const auto* t = std::get_if<Cotree>(&decomposition)) {
    level.level = hierarchy_level(*t);
    doc["cograph"] = true;
    doc["cotree"] = to_json(*t);
    doc["level"] = *level.level;
    doc["p4"] = nullptr;
  } else {
    const auto& nc = std::get<NotCograph>(decomposition);
    level.p4 = nc.p4;
    doc["cograph"] = false;
    doc["cotree"] = nullptr;
    doc["level"] = nullptr;
    Json p4 = Json::array();
    for (auto i : nc.p4) p4.push_back(g.vertex(i));
    doc["p4"] = std::move(p4);
  }
  const SmoothabilityVerdict v = verdict_for(level);
  doc["verdict"] = to_json(v);
  doc["witness"] = v.c1bv ? Json(nullptr) : to_json(g, witness(g));
  return doc;
}

Json to_json(const RotationNumber& r) {
  if (r.exact)
    return Json{{"exact", true}, {"rotation", to_json(*r.exact)}, {"period", r.period_searched}};
  return Json{{"exact", false}, {"lower", to_json(r.lo)}, {"upper", to_json(r.hi)}, {"q_max", r.period_searched}};
}

Json to_json(const ActionAssignment& asg) {
  Json words = Json::array();
  for (const auto& w : asg.words) words.push_back(to_string(w));
  Json witnesses = Json::array();
  for (const auto& x : asg.witnesses) witnesses.push_back(to_json(x));
  return Json{{"version", kFormatVersion},
              {"a", to_json(asg.a)},
              {"b", to_json(asg.b)},
              {"t", to_json(asg.t)},
              {"x0", to_json(asg.x0)},
              {"words", std::move(words)},
              {"witnesses", std::move(witnesses)}};
}

ActionAssignment assignment_from_json(const Json& j) {
  ActionAssignment asg{pl_map_from_json(j.at("a")), pl_map_from_json(j.at("b")), pl_map_from_json(j.at("t")),
                       rational_from_json(j.at("x0")), {}, {}};
  if (asg.a.domain() != Domain::Interval || asg.b.domain() != Domain::Interval ||
      asg.t.domain() != Domain::Interval)
    throw Error("action bundles act on I");
  if (j.contains("words"))
    for (const auto& w : j.at("words")) asg.words.push_back(parse_word(w.get<std::string>()));
  if (j.contains("witnesses"))
    for (const auto& x : j.at("witnesses")) asg.witnesses.push_back(rational_from_json(x));
  if (!asg.witnesses.empty() && asg.witnesses.size() != asg.words.size())
    throw Error("\"witnesses\" must list one point per word");
  return asg;
}

}  // namespace raag1d
