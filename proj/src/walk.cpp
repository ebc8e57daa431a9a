#include "ustlab/walk.hpp"

#include <algorithm>
#include <map>

namespace ustlab {

std::string_view mark_name(MarkKind k) {
  switch (k) {
    case MarkKind::sigma_in: return "sigma_in";
    case MarkKind::sigma_out: return "sigma_out";
    case MarkKind::sigma_hat: return "sigma_hat";
    case MarkKind::branch_start: return "branch_start";
  }
  return "unknown";
}

std::vector<Mark> WalkTrace::marks_of(MarkKind kind) const {
  std::vector<Mark> out;
  for (const auto& m : marks)
    if (m.kind == kind) out.push_back(m);
  return out;
}

bool trace_consistent(const Graph& g, const WalkTrace& trace) {
  if (trace.steps + trace.segment_starts.size() != trace.vertices.size()) return false;
  if (!trace.vertices.empty() && (trace.segment_starts.empty() || trace.segment_starts.front() != 0)) return false;
  for (std::size_t i = 1; i < trace.segment_starts.size(); ++i)
    if (trace.segment_starts[i] <= trace.segment_starts[i - 1]) return false;
  std::size_t seg = 0;
  for (std::size_t i = 0; i < trace.vertices.size(); ++i) {
    if (!g.contains(trace.vertices[i])) return false;
    if (seg < trace.segment_starts.size() && trace.segment_starts[seg] == i) {
      ++seg;
      continue;
    }
    if (!g.has_edge(trace.vertices[i - 1], trace.vertices[i])) return false;
  }
  std::map<MarkKind, std::size_t> last;
  for (const auto& m : trace.marks) {
    if (m.index > trace.vertices.size()) return false;
    auto it = last.find(m.kind);
    if (it != last.end() && m.index <= it->second) return false;
    last[m.kind] = m.index;
  }
  return true;
}

Vertex step(const Graph& g, Vertex v, RngStream& rng) {
  auto nb = g.neighbors(v);
  if (g.unit_weights()) return nb[rng.uniform_index(nb.size())].to;
  auto cum = g.cumulative(v);
  const double x = rng.uniform01() * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), x);
  if (it == cum.end()) --it;
  return nb[static_cast<std::size_t>(it - cum.begin())].to;
}

void LoopErasedPath::ensure(Vertex v) {
  if (static_cast<std::size_t>(v) >= pos_.size()) pos_.resize(static_cast<std::size_t>(v) + 1, -1);
}

bool LoopErasedPath::contains(Vertex v) const {
  return static_cast<std::size_t>(v) < pos_.size() && pos_[static_cast<std::size_t>(v)] >= 0;
}

std::size_t LoopErasedPath::push(Vertex v) {
  ensure(v);
  auto p = pos_[static_cast<std::size_t>(v)];
  if (p < 0) {
    pos_[static_cast<std::size_t>(v)] = static_cast<std::ptrdiff_t>(path_.size());
    path_.push_back(v);
    return 0;
  }
  const auto keep = static_cast<std::size_t>(p) + 1;
  const std::size_t erased = path_.size() - keep;
  for (std::size_t i = keep; i < path_.size(); ++i) pos_[static_cast<std::size_t>(path_[i])] = -1;
  path_.resize(keep);
  return erased;
}

void LoopErasedPath::clear() {
  for (Vertex v : path_) pos_[static_cast<std::size_t>(v)] = -1;
  path_.clear();
}

std::vector<Vertex> loop_erase(std::span<const Vertex> path) {
  Vertex bound = 0;
  for (Vertex v : path) bound = std::max(bound, v);
  LoopErasedPath lep(static_cast<std::size_t>(bound) + 1);
  for (Vertex v : path) lep.push(v);
  return {lep.vertices().begin(), lep.vertices().end()};
}

}  // namespace ustlab
