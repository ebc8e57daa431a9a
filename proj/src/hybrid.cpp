#include "detail.hpp"

namespace ustlab {

GenerationResult hybrid(const Graph& g, std::size_t branches, RngStream& rng, std::optional<Vertex> root) {
  const std::size_t n = g.vertex_count();
  if (branches < 1) throw GraphError("hybrid needs at least one branch");
  if (branches >= n)
    throw GraphError("hybrid cannot build " + std::to_string(branches) + " branches on " + std::to_string(n) +
                     " vertices");
  const Vertex r = root ? *root : static_cast<Vertex>(rng.uniform_index(n));
  if (!g.contains(r)) throw GraphError("root " + std::to_string(r) + " is not in the graph");

  GenerationResult out;
  if (!g.is_complete()) {
    out.uniformity_guaranteed = false;
    out.warning = "hybrid on a non-complete graph: output law is not guaranteed to be uniform";
  }
  std::vector<char> visited(n, 0);
  visited[static_cast<std::size_t>(r)] = 1;
  std::size_t count = 1;
  std::vector<Edge> edges;
  out.trace.start_segment(r);
  detail::aldous_broder_phase(g, branches, visited, count, edges, out, rng);

  std::vector<Vertex> seen;
  for (std::size_t v = 0; v < n; ++v)
    if (visited[v]) seen.push_back(static_cast<Vertex>(v));
  out.initial = Tree(std::move(seen), edges, r);

  detail::wilson_phase(g, visited, count, edges, out, rng);
  out.tree = Tree(detail::all_vertices(n), std::move(edges), r);
  out.rw_steps = out.trace.steps;
  return out;
}

}  // namespace ustlab
