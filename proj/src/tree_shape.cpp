#include <algorithm>
#include <map>

#include "ustlab/oracles.hpp"

namespace ustlab {

namespace {

using Adjacency = std::map<Vertex, std::vector<Vertex>>;

Adjacency adjacency(const Tree& t) {
  Adjacency adj;
  for (Vertex v : t.vertices()) adj[v];
  for (const auto& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::string encode(const Adjacency& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj.at(v))
    if (w != parent) kids.push_back(encode(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<Vertex> centers(const Adjacency& adj) {
  std::map<Vertex, std::size_t> deg;
  std::vector<Vertex> layer;
  for (const auto& [v, nb] : adj) {
    deg[v] = nb.size();
    if (nb.size() <= 1) layer.push_back(v);
  }
  std::size_t remaining = adj.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj.at(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_shape(const Tree& t) {
  if (!is_tree(t)) throw std::invalid_argument("canonical_shape needs a tree");
  const auto adj = adjacency(t);
  std::string best;
  for (Vertex c : centers(adj)) {
    auto s = encode(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::size_t count_isomorphic_subtrees(const Tree& host, const Tree& pattern) {
  const std::size_t p = pattern.edges().size();
  if (p == 0) return host.size();
  const auto& edges = host.edges();
  if (p > edges.size()) return 0;
  const auto target = canonical_shape(pattern);
  std::size_t count = 0;
  std::vector<char> pick(edges.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), 1);
  do {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (pick[i]) sub.push_back(edges[i]);
    Tree t = Tree::from_edges(std::move(sub));
    if (is_tree(t) && canonical_shape(t) == target) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace ustlab
