#include "ustlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ustlab {

namespace {

std::string vertex_pair(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "complete_self_loops" || name == "complete-self-loops") return Family::complete_self_loops;
  if (name == "cycle") return Family::cycle;
  if (name == "hypercube") return Family::hypercube;
  if (name == "grid") return Family::grid;
  if (name == "complete_bipartite" || name == "complete-bipartite" || name == "bipartite")
    return Family::complete_bipartite;
  throw GraphError("unknown graph family: " + std::string(name));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_self_loops: return "complete_self_loops";
    case Family::cycle: return "cycle";
    case Family::hypercube: return "hypercube";
    case Family::grid: return "grid";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "unknown";
}

bool is_connected(std::size_t n, std::span<const WeightedEdge> edges) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    auto a = find(static_cast<std::size_t>(e.u));
    auto b = find(static_cast<std::size_t>(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph::Graph(std::size_t n, std::span<const WeightedEdge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  if (n > static_cast<std::size_t>(INT32_MAX)) throw GraphError("too many vertices");
  std::vector<std::size_t> count(n, 0);
  std::vector<std::pair<Edge, double>> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
      throw GraphError("edge endpoint out of range: " + vertex_pair(e.u, e.v));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw GraphError("edge weight must be positive and finite: " + vertex_pair(e.u, e.v));
    sorted.emplace_back(make_edge(e.u, e.v), e.weight);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first)
      throw GraphError("duplicate edge " + vertex_pair(sorted[i].first.u, sorted[i].first.v));
  }
  if (!is_connected(n, edges)) throw GraphError("graph is disconnected");

  for (const auto& [e, w] : sorted) {
    ++count[static_cast<std::size_t>(e.u)];
    if (e.u != e.v) ++count[static_cast<std::size_t>(e.v)];
    if (e.u == e.v) has_self_loops_ = true;
    else edges_.push_back(e);
    if (w != 1.0) unit_weights_ = false;
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + count[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [e, w] : sorted) {
    adj_[fill[static_cast<std::size_t>(e.u)]++] = Neighbor{e.v, w};
    if (e.u != e.v) adj_[fill[static_cast<std::size_t>(e.v)]++] = Neighbor{e.u, w};
  }
  cum_.resize(adj_.size());
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    double acc = 0.0;
    for (std::size_t j = offsets_[v]; j < offsets_[v + 1]; ++j) {
      acc += adj_[j].weight;
      cum_[j] = acc;
    }
    total_degree_ += acc;
  }
}

std::span<const Neighbor> Graph::neighbors(Vertex v) const {
  auto i = static_cast<std::size_t>(v);
  return {adj_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::span<const double> Graph::cumulative(Vertex v) const {
  auto i = static_cast<std::size_t>(v);
  return {cum_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

double Graph::degree(Vertex v) const {
  auto c = cumulative(v);
  return c.empty() ? 0.0 : c.back();
}

double Graph::weight(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return 0.0;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b,
                             [](const Neighbor& x, Vertex key) { return x.to < key; });
  return (it != nb.end() && it->to == b) ? it->weight : 0.0;
}

bool Graph::is_complete() const {
  if (!unit_weights_) return false;
  const auto n = vertex_count();
  return edges_.size() == n * (n - 1) / 2;
}

std::ptrdiff_t Graph::edge_id(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return (it != edges_.end() && *it == e) ? it - edges_.begin() : -1;
}

std::vector<WeightedEdge> Graph::weighted_edges() const {
  std::vector<WeightedEdge> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (const auto& nb : neighbors(static_cast<Vertex>(v))) {
      if (nb.to >= static_cast<Vertex>(v)) out.push_back({static_cast<Vertex>(v), nb.to, nb.weight});
    }
  }
  return out;
}

Graph complete_graph(std::size_t n, bool self_loops) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < n; ++i) {
    if (self_loops) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i), 1.0});
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), 1.0});
  }
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1.0});
  return Graph(n, e);
}

Graph hypercube_graph(std::size_t d) {
  if (d < 1 || d > 24) throw GraphError("hypercube needs 1 <= d <= 24");
  const std::size_t n = std::size_t{1} << d;
  std::vector<WeightedEdge> e;
  e.reserve(n * d / 2);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t u = v ^ (std::size_t{1} << b);
      if (v < u) e.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u), 1.0});
    }
  }
  return Graph(n, e);
}

Graph grid_graph(std::size_t width, std::size_t height) {
  if (width < 2 || height < 2) throw GraphError("grid needs width, height >= 2");
  std::vector<WeightedEdge> e;
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      if (x + 1 < width) e.push_back({id(x, y), id(x + 1, y), 1.0});
      if (y + 1 < height) e.push_back({id(x, y), id(x, y + 1), 1.0});
    }
  }
  return Graph(width * height, e);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw GraphError("bipartite sides must be nonempty");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j), 1.0});
  return Graph(a + b, e);
}

Graph make_family(Family family, std::span<const long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw GraphError(std::string(family_name(family)) + " expects " + std::to_string(count) + " parameter(s)");
    for (long p : params)
      if (p < 0) throw GraphError("graph parameters must be nonnegative");
  };
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  switch (family) {
    case Family::complete:
      need(1);
      return complete_graph(at(0), false);
    case Family::complete_self_loops:
      need(1);
      return complete_graph(at(0), true);
    case Family::cycle:
      need(1);
      return cycle_graph(at(0));
    case Family::hypercube:
      need(1);
      return hypercube_graph(at(0));
    case Family::grid:
      need(2);
      return grid_graph(at(0), at(1));
    case Family::complete_bipartite:
      if (params.size() == 1) {
        need(1);
        if (at(0) < 2 || at(0) % 2 != 0) throw GraphError("complete_bipartite needs an even n >= 2");
        return complete_bipartite_graph(at(0) / 2, at(0) / 2);
      }
      need(2);
      return complete_bipartite_graph(at(0), at(1));
  }
  throw GraphError("unknown graph family");
}

}  // namespace ustlab
