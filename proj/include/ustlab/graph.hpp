#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ustlab {

using Vertex = std::int32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unordered vertex pair stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 1.0;
};

struct Neighbor {
  Vertex to = 0;
  double weight = 1.0;
};

enum class Family { complete, complete_self_loops, cycle, hypercube, grid, complete_bipartite };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// Undirected weighted graph with optional self-loops, immutable after
// construction. Neighbor lists are sorted by vertex id.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Neighbor> neighbors(Vertex v) const;
  std::span<const double> cumulative(Vertex v) const;
  double degree(Vertex v) const;
  double total_degree() const { return total_degree_; }
  double weight(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return weight(a, b) > 0.0; }
  bool has_self_loops() const { return has_self_loops_; }
  bool unit_weights() const { return unit_weights_; }
  bool is_complete() const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  // Non-loop edges, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  // Position of a non-loop edge in edges(), or -1.
  std::ptrdiff_t edge_id(Edge e) const;

  std::vector<WeightedEdge> weighted_edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<double> cum_;
  std::vector<Edge> edges_;
  double total_degree_ = 0.0;
  bool has_self_loops_ = false;
  bool unit_weights_ = true;
};

Graph make_family(Family family, std::span<const long> params);
Graph complete_graph(std::size_t n, bool self_loops = false);
Graph cycle_graph(std::size_t n);
Graph hypercube_graph(std::size_t d);
Graph grid_graph(std::size_t width, std::size_t height);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

// Parses "u v" or "u v w" lines; '#' lines are comments.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

bool is_connected(std::size_t n, std::span<const WeightedEdge> edges);

}  // namespace ustlab
