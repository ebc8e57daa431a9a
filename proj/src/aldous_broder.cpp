#include "detail.hpp"

namespace ustlab {

namespace detail {

void aldous_broder_phase(const Graph& g, std::size_t close_limit, std::vector<char>& visited, std::size_t& count,
                         std::vector<Edge>& edges, GenerationResult& out, RngStream& rng) {
  const std::size_t n = g.vertex_count();
  auto& trace = out.trace;
  Vertex cur = trace.vertices.back();
  bool open = false;
  std::size_t branch = out.branches.size();
  BranchRecord rec;
  while (count < n) {
    const Vertex next = step(g, cur, rng);
    trace.advance(next);
    const std::size_t t = trace.vertices.size() - 1;
    if (!visited[static_cast<std::size_t>(next)]) {
      visited[static_cast<std::size_t>(next)] = 1;
      ++count;
      const Edge e = make_edge(cur, next);
      edges.push_back(e);
      out.growth.push_back(trace.steps);
      if (!open) {
        open = true;
        ++branch;
        trace.mark(MarkKind::sigma_out, t, branch);
        rec = BranchRecord{};
        rec.index = branch;
        rec.anchor = e;
        rec.attach = cur;
        rec.t_start = t;
        rec.prior_size = count - 1;
      }
      rec.path.push_back(next);
    } else if (open) {
      open = false;
      trace.mark(MarkKind::sigma_in, t, branch);
      rec.t_stop = t;
      out.branches.push_back(std::move(rec));
      if (close_limit != 0 && branch >= close_limit) return;
    }
    cur = next;
  }
  if (open) {
    const std::size_t t = trace.vertices.size();
    trace.mark(MarkKind::sigma_in, t, branch);
    rec.t_stop = t;
    out.branches.push_back(std::move(rec));
  }
}

}  // namespace detail

GenerationResult aldous_broder(const Graph& g, std::optional<Vertex> root, RngStream& rng) {
  const std::size_t n = g.vertex_count();
  const Vertex r = root ? *root : static_cast<Vertex>(rng.uniform_index(n));
  if (!g.contains(r)) throw GraphError("root " + std::to_string(r) + " is not in the graph");
  GenerationResult out;
  std::vector<char> visited(n, 0);
  visited[static_cast<std::size_t>(r)] = 1;
  std::size_t count = 1;
  std::vector<Edge> edges;
  out.trace.start_segment(r);
  out.initial = Tree::single_vertex(r);
  detail::aldous_broder_phase(g, 0, visited, count, edges, out, rng);
  out.tree = Tree(detail::all_vertices(n), std::move(edges), r);
  out.rw_steps = out.trace.steps;
  return out;
}

}  // namespace ustlab
