#pragma once

#include <vector>

#include "ustlab/algorithms.hpp"

namespace ustlab::detail {

// O(1) uniform sampling and removal over a vertex subset.
class RemovableSet {
 public:
  RemovableSet(std::size_t n, const std::vector<char>& excluded);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  Vertex sample(RngStream& rng) const { return items_[rng.uniform_index(items_.size())]; }
  void remove(Vertex v);

 private:
  std::vector<Vertex> items_;
  std::vector<std::ptrdiff_t> pos_;
};

// Walks from uniformly chosen vertices outside the tree until it spans.
// in_tree, edges and tree_size describe the current tree and are updated.
void wilson_phase(const Graph& g, std::vector<char>& in_tree, std::size_t& tree_size, std::vector<Edge>& edges,
                  GenerationResult& out, RngStream& rng);

// Aldous-Broder walk from the trace's last vertex. Stops at cover or when
// close_limit branches have closed (0 means no limit).
void aldous_broder_phase(const Graph& g, std::size_t close_limit, std::vector<char>& visited, std::size_t& count,
                         std::vector<Edge>& edges, GenerationResult& out, RngStream& rng);

std::vector<Vertex> all_vertices(std::size_t n);

}  // namespace ustlab::detail
