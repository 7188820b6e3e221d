#include "raag1d/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "raag1d/errors.hpp"

namespace raag1d {

namespace {

// Accumulates vertices in first-appearance order plus an edge list.
struct GraphBuilder {
  std::vector<VertexId> vertices;
  std::unordered_set<VertexId> known;
  std::vector<std::pair<VertexId, VertexId>> edges;

  void vertex(const VertexId& v) {
    if (known.insert(v).second) vertices.push_back(v);
  }
  void edge(std::size_t line, const VertexId& u, const VertexId& v) {
    if (u == v) throw ParseError(line, "self-loop at '" + u + "'");
    vertex(u);
    vertex(v);
    edges.emplace_back(u, v);
  }
  SimplicialGraph build() { return SimplicialGraph(std::move(vertices), edges); }
};

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool plain_dot_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string dot_quote(const std::string& s) {
  if (plain_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct DotToken {
  enum Kind { Id, LBrace, RBrace, Semi, EdgeOp, End } kind;
  std::string text;
  std::size_t line;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view src) : src_(src) {}

  DotToken next() {
    skip_space_and_comments();
    if (pos_ >= src_.size()) return {DotToken::End, "", line_};
    const char c = src_[pos_];
    if (c == '{') return single(DotToken::LBrace);
    if (c == '}') return single(DotToken::RBrace);
    if (c == ';' || c == ',') return single(DotToken::Semi);
    if (c == '-' && pos_ + 1 < src_.size()) {
      if (src_[pos_ + 1] == '-') {
        pos_ += 2;
        return {DotToken::EdgeOp, "--", line_};
      }
      if (src_[pos_ + 1] == '>') throw ParseError(line_, "directed edge '->' is not supported");
    }
    if (c == '"') return quoted();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::size_t j = pos_;
      while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
                                 src_[j] == '.'))
        ++j;
      DotToken t{DotToken::Id, std::string(src_.substr(pos_, j - pos_)), line_};
      pos_ = j;
      return t;
    }
    if (c == '[' || c == '=') throw ParseError(line_, "attributes are not supported");
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;

  DotToken single(DotToken::Kind k) {
    DotToken t{k, std::string(1, src_[pos_]), line_};
    ++pos_;
    return t;
  }

  DotToken quoted() {
    const std::size_t start_line = line_;
    std::string out;
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
      if (src_[pos_] == '\n') ++line_;
      out += src_[pos_++];
    }
    if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated string");
    ++pos_;
    return {DotToken::Id, out, start_line};
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        pos_ += 2;
        while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
          if (src_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ += 2;
      } else {
        return;
      }
    }
  }
};

}  // namespace

SimplicialGraph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v' or 'vertex u'");
    if (tok[0] == "vertex")
      b.vertex(tok[1]);
    else
      b.edge(line_no, tok[0], tok[1]);
  }
  return b.build();
}

SimplicialGraph parse_dot(std::string_view text) {
  DotLexer lex(text);
  DotToken t = lex.next();
  if (t.kind == DotToken::Id && t.text == "strict") t = lex.next();
  if (t.kind != DotToken::Id || t.text != "graph") {
    if (t.kind == DotToken::Id && t.text == "digraph")
      throw ParseError(t.line, "directed graphs are not supported");
    throw ParseError(t.line, "expected 'graph'");
  }
  t = lex.next();
  if (t.kind == DotToken::Id) t = lex.next();
  if (t.kind != DotToken::LBrace) throw ParseError(t.line, "expected '{'");

  GraphBuilder b;
  t = lex.next();
  while (t.kind != DotToken::RBrace) {
    if (t.kind == DotToken::Semi) {
      t = lex.next();
      continue;
    }
    if (t.kind != DotToken::Id) throw ParseError(t.line, "expected a vertex identifier");
    VertexId prev = t.text;
    b.vertex(prev);
    t = lex.next();
    while (t.kind == DotToken::EdgeOp) {
      DotToken v = lex.next();
      if (v.kind != DotToken::Id) throw ParseError(v.line, "expected a vertex after '--'");
      b.edge(v.line, prev, v.text);
      prev = v.text;
      t = lex.next();
    }
  }
  t = lex.next();
  if (t.kind != DotToken::End) throw ParseError(t.line, "trailing input after '}'");
  return b.build();
}

GraphFormat detect_graph_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#' || tok[0].starts_with("//")) continue;
    const std::string& first = tok[0];
    if (first == "strict" || first == "graph" || first == "digraph" || first.starts_with("graph{"))
      return GraphFormat::Dot;
    return GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

SimplicialGraph parse_graph(std::string_view text) {
  return detect_graph_format(text) == GraphFormat::Dot ? parse_dot(text) : parse_edge_list(text);
}

std::string write_edge_list(const SimplicialGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    if (v.empty() || v == "vertex" || split_ws(v).size() != 1 || v.find('#') != std::string::npos)
      throw GraphError("vertex '" + v + "' cannot be written as an edge-list token");
    out += "vertex " + v + "\n";
  }
  for (auto [i, j] : g.edges()) out += g.vertex(i) + " " + g.vertex(j) + "\n";
  return out;
}

std::string write_dot(const SimplicialGraph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (const auto& v : g.vertices()) out += "  " + dot_quote(v) + ";\n";
  for (auto [i, j] : g.edges()) out += "  " + dot_quote(g.vertex(i)) + " -- " + dot_quote(g.vertex(j)) + ";\n";
  return out + "}\n";
}

}  // namespace raag1d
