#include "detail.hpp"

namespace ustlab {

Tree seeded_tree(const Graph& complete, const Tree& seed, RngStream& rng) {
  const std::size_t n = complete.vertex_count();
  if (!complete.is_complete()) throw GraphError("seeded_tree needs a complete graph");
  if (seed.size() > n) throw GraphError("seed tree has more vertices than the graph");
  for (Vertex v : seed.vertices())
    if (!complete.contains(v)) throw GraphError("seed vertex " + std::to_string(v) + " is out of range");
  auto grown = wilson(complete, seed, rng);

  std::vector<Vertex> label = detail::all_vertices(n);
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.uniform_index(i)]);
  std::vector<Edge> edges;
  edges.reserve(grown.tree.edges().size());
  for (const auto& e : grown.tree.edges())
    edges.push_back(make_edge(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]));
  return Tree(detail::all_vertices(n), std::move(edges));
}

Tree seeded_tree(std::size_t n, const Tree& seed, RngStream& rng) {
  return seeded_tree(complete_graph(n, false), seed, rng);
}

}  // namespace ustlab
