#include "ustlab/tree.hpp"

#include <algorithm>
#include <numeric>

namespace ustlab {

Tree::Tree(std::vector<Vertex> vertices, std::vector<Edge> edges, std::optional<Vertex> root)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), root_(root) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (auto& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
}

Tree Tree::single_vertex(Vertex v) { return Tree({v}, {}, v); }

Tree Tree::from_edges(std::vector<Edge> edges, std::optional<Vertex> root) {
  std::vector<Vertex> vs;
  vs.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return Tree(std::move(vs), std::move(edges), root);
}

bool Tree::contains_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Tree::contains_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

bool Tree::contains(const Tree& sub) const {
  return std::includes(vertices_.begin(), vertices_.end(), sub.vertices_.begin(), sub.vertices_.end()) &&
         std::includes(edges_.begin(), edges_.end(), sub.edges_.begin(), sub.edges_.end());
}

bool is_tree(const Tree& t) {
  const auto& vs = t.vertices();
  if (vs.empty() || t.edges().size() + 1 != vs.size()) return false;
  auto index = [&](Vertex v) -> std::ptrdiff_t {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    return (it != vs.end() && *it == v) ? it - vs.begin() : -1;
  };
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges()) {
    auto a = index(e.u), b = index(e.v);
    if (a < 0 || b < 0 || a == b) return false;
    auto ra = find(static_cast<std::size_t>(a)), rb = find(static_cast<std::size_t>(b));
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool is_subtree_of(const Graph& g, const Tree& t) {
  if (!is_tree(t)) return false;
  for (Vertex v : t.vertices())
    if (!g.contains(v)) return false;
  for (const auto& e : t.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

bool is_spanning_tree(const Graph& g, const Tree& t) {
  return t.size() == g.vertex_count() && is_subtree_of(g, t);
}

void require_subtree(const Graph& g, const Tree& t) {
  if (!is_tree(t)) throw GraphError("not a tree");
  for (Vertex v : t.vertices())
    if (!g.contains(v)) throw GraphError("tree vertex " + std::to_string(v) + " is not in the graph");
  for (const auto& e : t.edges())
    if (!g.has_edge(e.u, e.v))
      throw GraphError("tree edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
}

Edge CollapsedGraph::original_edge(Edge collapsed, std::size_t choice) const {
  if (collapsed.u == merged || collapsed.v == merged) {
    Vertex other = collapsed.u == merged ? collapsed.v : collapsed.u;
    const auto& options = boundary.at(static_cast<std::size_t>(other));
    return options.at(choice);
  }
  return make_edge(to_original.at(static_cast<std::size_t>(collapsed.u)),
                   to_original.at(static_cast<std::size_t>(collapsed.v)));
}

CollapsedGraph collapse(const Graph& g, const Tree& t) {
  require_subtree(g, t);
  const auto n = g.vertex_count();
  CollapsedGraph out;
  out.subtree = t;
  out.merged = 0;
  out.from_original.assign(n, 0);
  out.to_original.push_back(-1);
  for (std::size_t v = 0; v < n; ++v) {
    if (t.contains_vertex(static_cast<Vertex>(v))) continue;
    out.from_original[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(static_cast<Vertex>(v));
  }
  const auto m = out.to_original.size();
  out.boundary.assign(m, {});
  std::vector<double> boundary_weight(m, 0.0);
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.weighted_edges()) {
    bool in_u = t.contains_vertex(e.u), in_v = t.contains_vertex(e.v);
    if (in_u && in_v) continue;
    if (in_u || in_v) {
      Vertex outside = in_u ? e.v : e.u;
      auto c = static_cast<std::size_t>(out.from_original[static_cast<std::size_t>(outside)]);
      boundary_weight[c] += e.weight;
      out.boundary[c].push_back(make_edge(e.u, e.v));
      continue;
    }
    edges.push_back({out.from_original[static_cast<std::size_t>(e.u)],
                     out.from_original[static_cast<std::size_t>(e.v)], e.weight});
  }
  for (std::size_t c = 1; c < m; ++c)
    if (boundary_weight[c] > 0.0) edges.push_back({0, static_cast<Vertex>(c), boundary_weight[c]});
  out.graph = Graph(m, edges);
  return out;
}

}  // namespace ustlab
