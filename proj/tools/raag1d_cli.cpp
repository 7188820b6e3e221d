// raag1d: classify defining graphs, extract witnesses, build separating
// actions and run the exact support checkers.
//
// Exit status: 0 success, 1 a verification failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "raag1d/actions.hpp"
#include "raag1d/cotree.hpp"
#include "raag1d/errors.hpp"
#include "raag1d/graph_io.hpp"
#include "raag1d/lemmas.hpp"
#include "raag1d/random_maps.hpp"
#include "raag1d/rotation.hpp"
#include "raag1d/serialize.hpp"
#include "raag1d/word.hpp"

using namespace raag1d;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct RunConfig {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string check;
  std::uint64_t seed = 42;
  unsigned samples = 1000;
  unsigned qmax = kDefaultQMax;
};

// Input problems surface as this, so main can map them to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& cfg) {
  if (cfg.input.empty() || cfg.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw InputError("cannot open " + cfg.input);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const RunConfig& cfg) {
  const std::string text = read_input(cfg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

SimplicialGraph read_graph(const RunConfig& cfg) {
  const std::string text = read_input(cfg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw InputError(std::string("malformed JSON graph: ") + e.what());
    }
  }
  return parse_graph(text);
}

// Text mode: one "key: value" line per top-level field.
std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string out;
  for (const auto& [key, value] : doc.items())
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  return out;
}

void emit(const RunConfig& cfg, const Json& doc) {
  const std::string text = render(doc, cfg.format);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + cfg.output);
  out << text;
}

int cmd_classify(const RunConfig& cfg) {
  emit(cfg, classification_document(read_graph(cfg)));
  return kOk;
}

int cmd_witness(const RunConfig& cfg) {
  const auto g = read_graph(cfg);
  Json doc{{"version", kFormatVersion}, {"witness", to_json(g, witness(g))}};
  emit(cfg, doc);
  return kOk;
}

// One word per line; blank lines and '#' comments are skipped.
std::vector<FreeProductWord> read_words(const RunConfig& cfg) {
  std::istringstream in(read_input(cfg));
  std::vector<FreeProductWord> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    FreeProductWord w;
    try {
      w = parse_word(line);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    if (w.is_identity()) throw TrivialWord("line " + std::to_string(lineno) + ": '" + line + "' reduces to 1");
    words.push_back(std::move(w));
  }
  if (words.empty()) throw InputError("no words given");
  return words;
}

int cmd_realize(const RunConfig& cfg) {
  const auto asg = build_faithful_on(read_words(cfg));
  const auto report = certify(asg);
  if (!report.ok()) {
    std::cerr << "error: built action failed its own certification\n";
    return kFailed;
  }
  emit(cfg, to_json(asg));
  return kOk;
}

int cmd_rot(const RunConfig& cfg) {
  const PLMap f = pl_map_from_json(read_json(cfg));
  emit(cfg, Json{{"version", kFormatVersion}, {"rotation_number", to_json(rotation_number(f, cfg.qmax))}});
  return kOk;
}

// verify: each check runs over the instances in --input (an object or an
// array of objects), or over --samples seeded random instances.

struct Tally {
  std::size_t passed = 0, failed = 0;
  Json cases = Json::array();
};

Json instances(const Json& input) { return input.is_array() ? input : Json::array({input}); }

PLMap map_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing map \"") + key + "\"");
  return pl_map_from_json(j.at(key));
}

void check_comm_supp(const RunConfig& cfg, const Json* input, Tally& t) {
  auto record = [&](const PLMap& f, const PLMap& g) {
    const auto r = commutator_support_report(f, g);
    r.holds ? ++t.passed : ++t.failed;
    if (input || !r.holds)
      t.cases.push_back(Json{{"holds", r.holds}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  };
  if (input) {
    for (const auto& j : instances(*input)) record(map_field(j, "f"), map_field(j, "g"));
    return;
  }
  MapSampler rng(cfg.seed);
  for (unsigned i = 0; i < cfg.samples; ++i) {
    const bool circle = i % 2;
    const PLMap f = circle ? rng.circle_map() : rng.interval_map();
    const PLMap g = circle ? rng.circle_map() : rng.interval_map();
    record(f, g);
  }
}

template <class Report>
void check_triples(const RunConfig& cfg, const Json* input, Tally& t,
                   Report (*run)(const PLMap&, const PLMap&, const PLMap&)) {
  auto record = [&](const PLMap& b, const PLMap& c, const PLMap& d) {
    const auto r = run(b, c, d);
    r.holds ? ++t.passed : ++t.failed;
    if constexpr (requires { r.violating_set; }) {
      if (input || !r.holds) t.cases.push_back(Json{{"holds", r.holds}, {"violating_set", to_json(r.violating_set)}});
    } else {
      if (input || !r.holds)
        t.cases.push_back(Json{{"holds", r.holds}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
    }
  };
  if (input) {
    for (const auto& j : instances(*input)) record(map_field(j, "b"), map_field(j, "c"), map_field(j, "d"));
  } else {
    MapSampler rng(cfg.seed);
    for (unsigned i = 0; i < cfg.samples; ++i) {
      const PLMap b = rng.interval_map();
      const auto [c, d] = rng.disjoint_pair();
      record(b, c, d);
    }
  }
}

void check_two_jumps(const Json* input, Tally& t) {
  if (!input) throw InputError("two-jumps needs --input");
  for (const auto& j : instances(*input)) {
    std::vector<JumpTriple> triples;
    for (const auto& tr : j.value("triples", Json::array())) {
      if (!tr.is_array() || tr.size() != 3) throw InputError("a triple is [s, t, y]");
      triples.push_back({rational_from_json(tr[0]), rational_from_json(tr[1]), rational_from_json(tr[2])});
    }
    const auto r = check_two_jumps_prefix(map_field(j, "f"), map_field(j, "g"), triples);
    r.valid ? ++t.passed : ++t.failed;
    Json gaps = Json::array();
    for (const auto& g : r.gaps) gaps.push_back(to_json(g));
    t.cases.push_back(Json{{"valid", r.valid}, {"configuration", r.configuration}, {"gaps", std::move(gaps)}});
  }
}

// Input mode reports rotation numbers; random mode checks conjugation
// invariance on seeded conjugated rotations.
void check_rot(const RunConfig& cfg, const Json* input, Tally& t) {
  if (input) {
    for (const auto& j : instances(*input)) {
      const PLMap f = j.contains("map") ? map_field(j, "map") : pl_map_from_json(j);
      t.cases.push_back(to_json(rotation_number(f, cfg.qmax)));
      ++t.passed;
    }
    return;
  }
  MapSampler rng(cfg.seed);
  for (unsigned i = 0; i < cfg.samples; ++i) {
    const PLMap f = rng.conjugated_rotation(7), h = rng.circle_map();
    const auto rf = rotation_number(f, cfg.qmax), rc = rotation_number(conjugate(h, f), cfg.qmax);
    const bool ok = rf.exact && rc.exact == rf.exact;
    ok ? ++t.passed : ++t.failed;
    if (!ok) t.cases.push_back(Json{{"f", to_json(f)}, {"h", to_json(h)}});
  }
}

void check_action(const RunConfig& cfg, const Json* input, Tally& t) {
  auto record = [&](const ActionAssignment& asg) {
    const auto r = certify(asg);
    std::size_t moved = 0;
    for (bool m : r.word_moves) moved += m;
    r.ok() ? ++t.passed : ++t.failed;
    t.cases.push_back(Json{{"a_b_commute", r.a_b_commute},
                           {"supports_disjoint", r.supports_disjoint},
                           {"words", r.word_moves.size()},
                           {"words_moved", moved}});
  };
  if (input) {
    for (const auto& j : instances(*input)) record(assignment_from_json(j));
    return;
  }
  // Random words, one bundle for all of them.
  MapSampler rng(cfg.seed);
  std::vector<FreeProductWord> words;
  for (unsigned i = 0; i < cfg.samples; ++i) {
    std::vector<Syllable> syl;
    const auto len = 1 + rng.below(6);
    for (std::uint64_t k = 0; k < len; ++k) {
      auto e = [&] { return static_cast<std::int64_t>(rng.below(7)) - 3; };
      syl.push_back(k % 2 ? Syllable::t(e()) : Syllable::ab(e(), e()));
    }
    auto w = reduce(std::move(syl));
    if (!w.is_identity()) words.push_back(std::move(w));
  }
  record(build_faithful_on(words));
}

int cmd_verify(const RunConfig& cfg) {
  std::optional<Json> input;
  if (!cfg.input.empty()) input = read_json(cfg);
  const Json* in = input ? &*input : nullptr;
  Tally t;
  bool assertable = true;
  if (cfg.check == "comm-supp") {
    check_comm_supp(cfg, in, t);
  } else if (cfg.check == "phi-supp") {
    check_triples(cfg, in, t, &phi_support_report);
  } else if (cfg.check == "c1-containment") {
    // PL maps are not C^1, so this one is reported only.
    assertable = false;
    check_triples(cfg, in, t, &check_c1_containment);
  } else if (cfg.check == "two-jumps") {
    check_two_jumps(in, t);
  } else if (cfg.check == "rot") {
    check_rot(cfg, in, t);
  } else if (cfg.check == "action") {
    check_action(cfg, in, t);
  } else {
    throw InputError("unknown check '" + cfg.check + "'");
  }
  Json doc{{"version", kFormatVersion}, {"check", cfg.check}, {"mode", in ? "input" : "random"}};
  if (!in) {
    doc["seed"] = cfg.seed;
    doc["samples"] = cfg.samples;
  }
  doc["assertable"] = assertable;
  doc["passed"] = t.passed;
  doc["failed"] = t.failed;
  const bool ok = !assertable || t.failed == 0;
  doc["ok"] = ok;
  doc["cases"] = std::move(t.cases);
  emit(cfg, doc);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothability of right-angled Artin group actions in dimension one"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "input file (default: stdin)");
    sub->add_option("-o,--output", cfg.output, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify a defining graph (edge list, DOT or JSON)");
  add_io(classify_cmd);
  auto* witness_cmd = app.add_subcommand("witness", "embedding witness for a graph outside the smoothable class");
  add_io(witness_cmd);
  auto* realize_cmd = app.add_subcommand("realize", "build one action separating every listed word");
  add_io(realize_cmd);
  auto* rot_cmd = app.add_subcommand("rot", "rotation number of a circle map given as JSON");
  add_io(rot_cmd);
  rot_cmd->add_option("--qmax", cfg.qmax, "largest period searched")->check(CLI::PositiveNumber);
  auto* verify_cmd = app.add_subcommand("verify", "run an exact checker on input or seeded random data");
  add_io(verify_cmd);
  verify_cmd->add_option("--check", cfg.check, "checker to run")
      ->required()
      ->check(CLI::IsMember({"comm-supp", "phi-supp", "c1-containment", "two-jumps", "rot", "action"}));
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_option("--samples", cfg.samples, "random sample count");
  verify_cmd->add_option("--qmax", cfg.qmax, "largest period searched")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg);
    if (*witness_cmd) return cmd_witness(cfg);
    if (*realize_cmd) return cmd_realize(cfg);
    if (*rot_cmd) return cmd_rot(cfg);
    return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const TrivialWord& e) {
    std::cerr << "TrivialWord: " << e.what() << "\n";
  } catch (const HypothesisViolated& e) {
    std::cerr << "HypothesisViolated: " << e.what() << "\n";
  } catch (const NotApplicable& e) {
    std::cerr << "NotApplicable: " << e.what() << "\n";
  } catch (const EmptyGraph& e) {
    std::cerr << "EmptyGraph: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
  }
  return kBadInput;
}
