#include <numeric>

#include "detail.hpp"

namespace ustlab {

namespace detail {

RemovableSet::RemovableSet(std::size_t n, const std::vector<char>& excluded) : pos_(n, -1) {
  for (std::size_t v = 0; v < n; ++v) {
    if (excluded[v]) continue;
    pos_[v] = static_cast<std::ptrdiff_t>(items_.size());
    items_.push_back(static_cast<Vertex>(v));
  }
}

void RemovableSet::remove(Vertex v) {
  auto p = pos_[static_cast<std::size_t>(v)];
  if (p < 0) return;
  Vertex last = items_.back();
  items_[static_cast<std::size_t>(p)] = last;
  pos_[static_cast<std::size_t>(last)] = p;
  items_.pop_back();
  pos_[static_cast<std::size_t>(v)] = -1;
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  return vs;
}

void wilson_phase(const Graph& g, std::vector<char>& in_tree, std::size_t& tree_size, std::vector<Edge>& edges,
                  GenerationResult& out, RngStream& rng) {
  const std::size_t n = g.vertex_count();
  RemovableSet remaining(n, in_tree);
  LoopErasedPath lep(n);
  std::size_t branch = out.branches.size();
  auto& trace = out.trace;
  while (!remaining.empty()) {
    const Vertex v = remaining.sample(rng);
    ++branch;
    const std::size_t start = trace.vertices.size();
    trace.start_segment(v);
    trace.mark(MarkKind::branch_start, start, branch);
    lep.clear();
    lep.push(v);
    Vertex cur = v;
    Vertex hit = v;
    for (;;) {
      const Vertex next = step(g, cur, rng);
      trace.advance(next);
      if (in_tree[static_cast<std::size_t>(next)]) {
        hit = next;
        break;
      }
      lep.push(next);
      cur = next;
    }
    const std::size_t stop = trace.vertices.size() - 1;
    trace.mark(MarkKind::sigma_hat, stop, branch);

    BranchRecord rec;
    rec.index = branch;
    rec.path.assign(lep.vertices().begin(), lep.vertices().end());
    rec.anchor = make_edge(rec.path.back(), hit);
    rec.attach = hit;
    rec.t_start = start;
    rec.t_stop = stop;
    rec.prior_size = tree_size;
    for (std::size_t j = 0; j + 1 < rec.path.size(); ++j) edges.push_back(make_edge(rec.path[j], rec.path[j + 1]));
    edges.push_back(*rec.anchor);
    for (Vertex u : rec.path) {
      in_tree[static_cast<std::size_t>(u)] = 1;
      remaining.remove(u);
    }
    tree_size += rec.path.size();
    out.growth.insert(out.growth.end(), rec.path.size(), trace.steps);
    out.branches.push_back(std::move(rec));
  }
}

}  // namespace detail

GenerationResult wilson(const Graph& g, const Tree& initial, RngStream& rng) {
  const std::size_t n = g.vertex_count();
  GenerationResult out;
  Tree start;
  if (initial.empty()) {
    start = Tree::single_vertex(static_cast<Vertex>(rng.uniform_index(n)));
  } else {
    require_subtree(g, initial);
    start = initial;
    if (!start.root()) start.set_root(start.vertices().front());
  }
  std::vector<char> in_tree(n, 0);
  for (Vertex v : start.vertices()) in_tree[static_cast<std::size_t>(v)] = 1;
  std::vector<Edge> edges = start.edges();
  std::size_t tree_size = start.size();
  out.growth.assign(edges.size(), 0);
  out.initial = start;
  detail::wilson_phase(g, in_tree, tree_size, edges, out, rng);
  out.tree = Tree(detail::all_vertices(n), std::move(edges), start.root());
  out.rw_steps = out.trace.steps;
  return out;
}

GenerationResult wilson(const Graph& g, Vertex root, RngStream& rng) {
  if (!g.contains(root)) throw GraphError("root " + std::to_string(root) + " is not in the graph");
  return wilson(g, Tree::single_vertex(root), rng);
}

GenerationResult edge_wilson(const Graph& g, RngStream& rng) {
  const auto& edges = g.edges();
  if (edges.empty()) throw GraphError("edge_wilson needs a graph with at least one edge");
  const Edge e = edges[rng.uniform_index(edges.size())];
  return wilson(g, Tree::from_edges({e}, e.u), rng);
}

}  // namespace ustlab
