#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ustlab/graph.hpp"

namespace ustlab {

// A tree given by its vertex set and edge set, both kept sorted.
// Equality ignores the root.
class Tree {
 public:
  Tree() = default;
  Tree(std::vector<Vertex> vertices, std::vector<Edge> edges, std::optional<Vertex> root = {});

  static Tree single_vertex(Vertex v);
  // Vertex set is the set of edge endpoints.
  static Tree from_edges(std::vector<Edge> edges, std::optional<Vertex> root = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Vertex> root() const { return root_; }
  void set_root(std::optional<Vertex> r) { root_ = r; }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains_vertex(Vertex v) const;
  bool contains_edge(Edge e) const;
  bool contains(const Tree& sub) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<Vertex> root_;
};

// True when the edge set is connected, acyclic and spans exactly vertices().
bool is_tree(const Tree& t);
bool is_subtree_of(const Graph& g, const Tree& t);
bool is_spanning_tree(const Graph& g, const Tree& t);
// Throws GraphError with a reason when t is not a sub-tree of g.
void require_subtree(const Graph& g, const Tree& t);

// Edge list text plus a "# root r" line when a root is set.
std::string to_edge_list(const Tree& t);
// Accepts the same format; a tree with no edges needs a "# root r" line.
Tree parse_tree(std::string_view text);

// Collapse of a sub-tree into one vertex. The merged vertex is id 0 and the
// remaining vertices keep their relative order.
struct CollapsedGraph {
  Graph graph;
  Vertex merged = 0;
  std::vector<Vertex> to_original;    // collapsed id -> original id (-1 for merged)
  std::vector<Vertex> from_original;  // original id -> collapsed id
  // Original edges between a collapsed vertex and the sub-tree.
  std::vector<std::vector<Edge>> boundary;
  Tree subtree;

  // Original edge represented by a collapsed edge, choosing among boundary
  // edges by index.
  Edge original_edge(Edge collapsed, std::size_t choice = 0) const;
};

CollapsedGraph collapse(const Graph& g, const Tree& t);

}  // namespace ustlab
