#include "detail.hpp"

namespace ustlab {

UrnOutcome color_assignment(std::size_t n, Vertex r, RngStream& rng, WalkTrace* draws) {
  if (n < 2) throw GraphError("urn needs at least two balls");
  if (r < 0 || static_cast<std::size_t>(r) >= n) throw GraphError("initial ball out of range");
  UrnOutcome out;
  out.classes.assign(n, {});
  out.classes[0].push_back(r);
  std::vector<char> colored(n, 0);
  colored[static_cast<std::size_t>(r)] = 1;
  detail::RemovableSet uncolored(n, colored);
  if (draws) draws->start_segment(r);

  std::size_t color = 1;
  auto paint = [&](Vertex b) {
    colored[static_cast<std::size_t>(b)] = 1;
    uncolored.remove(b);
    out.classes[color].push_back(b);
  };
  auto paint_uniform_uncolored = [&] {
    const Vertex b = uncolored.sample(rng);
    if (draws) {
      draws->advance(b);
      draws->mark(MarkKind::sigma_out, draws->vertices.size() - 1, color);
    }
    paint(b);
  };

  paint_uniform_uncolored();
  while (!uncolored.empty()) {
    const auto b = static_cast<Vertex>(rng.uniform_index(n));
    if (draws) draws->advance(b);
    if (!colored[static_cast<std::size_t>(b)]) {
      paint(b);
    } else {
      if (draws) draws->mark(MarkKind::sigma_in, draws->vertices.size() - 1, color);
      ++color;
      paint_uniform_uncolored();
    }
  }
  if (draws) draws->mark(MarkKind::sigma_in, draws->vertices.size(), color);
  return out;
}

GenerationResult urn_tree(std::size_t n, Vertex r, RngStream& rng) {
  GenerationResult out;
  UrnOutcome urn = color_assignment(n, r, rng, &out.trace);
  const auto sigma_out = out.trace.marks_of(MarkKind::sigma_out);
  const auto sigma_in = out.trace.marks_of(MarkKind::sigma_in);

  std::vector<Vertex> tree_vertices{r};
  std::vector<Edge> edges;
  out.initial = Tree::single_vertex(r);
  for (std::size_t i = 1; i < urn.classes.size() && !urn.classes[i].empty(); ++i) {
    const auto& cls = urn.classes[i];
    const Vertex u = tree_vertices[rng.uniform_index(tree_vertices.size())];
    BranchRecord rec;
    rec.index = i;
    rec.path = cls;
    rec.anchor = make_edge(u, cls.front());
    rec.attach = u;
    rec.t_start = sigma_out[i - 1].index;
    rec.t_stop = sigma_in[i - 1].index;
    rec.prior_size = tree_vertices.size();
    edges.push_back(*rec.anchor);
    for (std::size_t j = 0; j + 1 < cls.size(); ++j) edges.push_back(make_edge(cls[j], cls[j + 1]));
    tree_vertices.insert(tree_vertices.end(), cls.begin(), cls.end());
    out.branches.push_back(std::move(rec));
  }
  // A ball joins the tree at the draw that paints it.
  std::vector<char> seen(n, 0);
  seen[static_cast<std::size_t>(r)] = 1;
  for (std::size_t t = 1; t < out.trace.vertices.size(); ++t) {
    auto b = static_cast<std::size_t>(out.trace.vertices[t]);
    if (!seen[b]) {
      seen[b] = 1;
      out.growth.push_back(t);
    }
  }
  out.tree = Tree(detail::all_vertices(n), std::move(edges), r);
  out.rw_steps = out.trace.steps;
  return out;
}

}  // namespace ustlab
