#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "ustlab/graph.hpp"
#include "ustlab/tree.hpp"

namespace ustlab {

namespace {

struct ParsedLine {
  long u = 0;
  long v = 0;
  std::optional<double> w;
};

struct ParsedDocument {
  std::vector<ParsedLine> lines;
  std::optional<long> root;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_vertex(std::string_view tok, std::size_t line_no) {
  long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size() || value < 0 || value > INT32_MAX - 1)
    throw GraphError("line " + std::to_string(line_no) + ": invalid vertex id '" + std::string(tok) + "'");
  return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  double value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw GraphError("line " + std::to_string(line_no) + ": invalid weight '" + std::string(tok) + "'");
  if (!(value > 0.0)) throw GraphError("line " + std::to_string(line_no) + ": weight must be positive");
  return value;
}

ParsedDocument parse_document(std::string_view text) {
  ParsedDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks[0].front() == '#') {
      if (toks[0] == "#" && toks.size() == 3 && toks[1] == "root") doc.root = parse_vertex(toks[2], line_no);
      else if (toks[0] == "#root" && toks.size() == 2) doc.root = parse_vertex(toks[1], line_no);
    } else {
      if (toks.size() != 2 && toks.size() != 3)
        throw GraphError("line " + std::to_string(line_no) + ": expected 'u v' or 'u v w'");
      ParsedLine pl;
      pl.u = parse_vertex(toks[0], line_no);
      pl.v = parse_vertex(toks[1], line_no);
      if (toks.size() == 3) pl.w = parse_weight(toks[2], line_no);
      doc.lines.push_back(pl);
    }
    if (end == text.size()) break;
  }
  return doc;
}

std::string format_weight(double w) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, p);
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  auto doc = parse_document(text);
  if (doc.lines.empty()) throw GraphError("edge list contains no edges");
  long max_id = 0;
  std::vector<WeightedEdge> edges;
  for (const auto& l : doc.lines) {
    max_id = std::max({max_id, l.u, l.v});
    edges.push_back({static_cast<Vertex>(l.u), static_cast<Vertex>(l.v), l.w.value_or(1.0)});
  }
  return Graph(static_cast<std::size_t>(max_id) + 1, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& e : g.weighted_edges()) {
    out << e.u << ' ' << e.v;
    if (!g.unit_weights()) out << ' ' << format_weight(e.weight);
    out << '\n';
  }
  return out.str();
}

std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  if (t.root()) out << "# root " << *t.root() << '\n';
  for (const auto& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Tree parse_tree(std::string_view text) {
  auto doc = parse_document(text);
  std::vector<Edge> edges;
  for (const auto& l : doc.lines) {
    if (l.u == l.v) throw GraphError("tree contains a self-loop");
    edges.push_back(make_edge(static_cast<Vertex>(l.u), static_cast<Vertex>(l.v)));
  }
  std::optional<Vertex> root;
  if (doc.root) root = static_cast<Vertex>(*doc.root);
  Tree t;
  if (edges.empty()) {
    if (!root) throw GraphError("tree has no edges and no root");
    t = Tree::single_vertex(*root);
  } else {
    t = Tree::from_edges(std::move(edges), root);
  }
  if (!is_tree(t)) throw GraphError("edge list is not a tree");
  if (root && !t.contains_vertex(*root)) throw GraphError("root is not a tree vertex");
  return t;
}

}  // namespace ustlab
