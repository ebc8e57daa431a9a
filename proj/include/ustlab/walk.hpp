#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ustlab/graph.hpp"
#include "ustlab/rng.hpp"

namespace ustlab {

enum class MarkKind { sigma_in, sigma_out, sigma_hat, branch_start };

std::string_view mark_name(MarkKind k);

struct Mark {
  MarkKind kind = MarkKind::sigma_in;
  std::size_t index = 0;   // position in WalkTrace::vertices
  std::size_t branch = 0;  // 1-based branch number
  friend bool operator==(const Mark&, const Mark&) = default;
};

// Vertex sequence of one run. A run may consist of several walk segments
// (Wilson restarts its walk for every branch); segment_starts lists the
// index where each begins, so steps = |vertices| - |segment_starts|.
// A final sigma_in of an Aldous-Broder branch closed by covering the graph
// carries index |vertices|, one past the last position.
struct WalkTrace {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> segment_starts;
  std::vector<Mark> marks;
  std::size_t steps = 0;

  void start_segment(Vertex v) {
    segment_starts.push_back(vertices.size());
    vertices.push_back(v);
  }
  void advance(Vertex v) {
    vertices.push_back(v);
    ++steps;
  }
  void mark(MarkKind kind, std::size_t index, std::size_t branch) { marks.push_back({kind, index, branch}); }
  std::vector<Mark> marks_of(MarkKind kind) const;
  friend bool operator==(const WalkTrace&, const WalkTrace&) = default;
};

// Checks adjacency inside segments, the step count and mark monotonicity.
bool trace_consistent(const Graph& g, const WalkTrace& trace);

// One step of the (weighted) random walk from v.
Vertex step(const Graph& g, Vertex v, RngStream& rng);

// Loop-erased path maintained chronologically with a vertex -> position map.
class LoopErasedPath {
 public:
  explicit LoopErasedPath(std::size_t vertex_bound = 0) : pos_(vertex_bound, -1) {}

  // Appends v, erasing the loop closed by v if v is already on the path.
  // Returns the number of vertices erased.
  std::size_t push(Vertex v);
  void clear();
  std::size_t size() const { return path_.size(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> vertices() const { return path_; }
  Vertex back() const { return path_.back(); }

 private:
  void ensure(Vertex v);
  std::vector<Vertex> path_;
  std::vector<std::ptrdiff_t> pos_;
};

std::vector<Vertex> loop_erase(std::span<const Vertex> path);

}  // namespace ustlab
