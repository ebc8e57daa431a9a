#include "ustlab/branches.hpp"

#include <algorithm>

namespace ustlab {

Algorithm parse_algorithm(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "aldous_broder" || s == "ab") return Algorithm::aldous_broder;
  if (s == "wilson") return Algorithm::wilson;
  if (s == "urn_tree" || s == "urn") return Algorithm::urn_tree;
  if (s == "hybrid") return Algorithm::hybrid;
  if (s == "edge_wilson") return Algorithm::edge_wilson;
  if (s == "seeded_tree" || s == "seeded") return Algorithm::seeded_tree;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::aldous_broder: return "aldous_broder";
    case Algorithm::wilson: return "wilson";
    case Algorithm::urn_tree: return "urn_tree";
    case Algorithm::hybrid: return "hybrid";
    case Algorithm::edge_wilson: return "edge_wilson";
    case Algorithm::seeded_tree: return "seeded_tree";
  }
  return "unknown";
}

Tree partial_tree(const Tree& prior, std::span<const BranchRecord> branches, std::size_t count) {
  std::vector<Vertex> vs = prior.vertices();
  std::vector<Edge> es = prior.edges();
  for (std::size_t i = 0; i < count && i < branches.size(); ++i) {
    const auto& b = branches[i];
    vs.insert(vs.end(), b.path.begin(), b.path.end());
    for (std::size_t j = 0; j + 1 < b.path.size(); ++j) es.push_back(make_edge(b.path[j], b.path[j + 1]));
    if (b.anchor) es.push_back(*b.anchor);
  }
  return Tree(std::move(vs), std::move(es), prior.root());
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw std::invalid_argument("malformed trace: " + why); }

struct Marker {
  std::vector<char> flags;
  bool test(Vertex v) const { return static_cast<std::size_t>(v) < flags.size() && flags[static_cast<std::size_t>(v)]; }
  void set(Vertex v) {
    if (static_cast<std::size_t>(v) >= flags.size()) flags.resize(static_cast<std::size_t>(v) + 1, 0);
    flags[static_cast<std::size_t>(v)] = 1;
  }
};

void extract_aldous_broder(const WalkTrace& trace, std::size_t begin, std::size_t end, Marker& visited,
                           std::size_t& count, std::vector<BranchRecord>& out, std::vector<Mark>& marks) {
  const auto& x = trace.vertices;
  visited.set(x[begin]);
  count = 1;
  bool open = false;
  BranchRecord rec;
  for (std::size_t t = begin + 1; t < end; ++t) {
    const Vertex v = x[t];
    if (!visited.test(v)) {
      visited.set(v);
      ++count;
      if (!open) {
        open = true;
        rec = BranchRecord{};
        rec.index = out.size() + 1;
        rec.anchor = make_edge(x[t - 1], v);
        rec.attach = x[t - 1];
        rec.t_start = t;
        rec.prior_size = count - 1;
        marks.push_back({MarkKind::sigma_out, t, rec.index});
      }
      rec.path.push_back(v);
    } else if (open) {
      open = false;
      rec.t_stop = t;
      marks.push_back({MarkKind::sigma_in, t, rec.index});
      out.push_back(std::move(rec));
    }
  }
  if (open) {
    rec.t_stop = end;
    marks.push_back({MarkKind::sigma_in, end, rec.index});
    out.push_back(std::move(rec));
  }
}

void extract_wilson_segment(const WalkTrace& trace, std::size_t begin, std::size_t end, Marker& covered,
                            std::size_t& tree_size, std::vector<BranchRecord>& out, std::vector<Mark>& marks) {
  if (end - begin < 2) malformed("walk segment without a step");
  const auto& x = trace.vertices;
  const Vertex hit = x[end - 1];
  std::vector<Vertex> walk(x.begin() + static_cast<std::ptrdiff_t>(begin), x.begin() + static_cast<std::ptrdiff_t>(end - 1));
  for (Vertex v : walk) {
    if (v == hit) malformed("walk segment revisits its stopping vertex");
    if (covered.test(v)) malformed("walk segment enters an earlier branch before stopping");
  }
  BranchRecord rec;
  rec.index = out.size() + 1;
  rec.path = loop_erase(walk);
  rec.anchor = make_edge(rec.path.back(), hit);
  rec.attach = hit;
  rec.t_start = begin;
  rec.t_stop = end - 1;
  rec.prior_size = tree_size;
  for (Vertex v : rec.path) covered.set(v);
  tree_size += rec.path.size();
  marks.push_back({MarkKind::branch_start, begin, rec.index});
  marks.push_back({MarkKind::sigma_hat, end - 1, rec.index});
  out.push_back(std::move(rec));
}

bool same_marks(std::vector<Mark> a, std::vector<Mark> b) {
  auto key = [](const Mark& m) { return std::tuple(static_cast<int>(m.kind), m.index, m.branch); };
  auto less = [&](const Mark& l, const Mark& r) { return key(l) < key(r); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

std::vector<BranchRecord> extract_branches(const WalkTrace& trace, Algorithm algorithm, std::size_t initial_size) {
  std::vector<BranchRecord> out;
  if (trace.vertices.empty()) return out;
  std::vector<std::size_t> starts = trace.segment_starts;
  if (starts.empty()) starts.push_back(0);
  if (starts.front() != 0) malformed("first segment does not start at index 0");
  for (std::size_t i = 1; i < starts.size(); ++i)
    if (starts[i] <= starts[i - 1] || starts[i] >= trace.vertices.size()) malformed("segment starts out of order");
  auto seg_end = [&](std::size_t i) { return i + 1 < starts.size() ? starts[i + 1] : trace.vertices.size(); };

  std::vector<Mark> marks;
  Marker covered;
  std::size_t tree_size = initial_size;
  std::size_t first_wilson = 0;
  switch (algorithm) {
    case Algorithm::aldous_broder:
      if (starts.size() != 1) malformed("Aldous-Broder trace with more than one segment");
      extract_aldous_broder(trace, 0, trace.vertices.size(), covered, tree_size, out, marks);
      first_wilson = 1;
      break;
    case Algorithm::hybrid:
      extract_aldous_broder(trace, 0, seg_end(0), covered, tree_size, out, marks);
      first_wilson = 1;
      break;
    case Algorithm::wilson:
    case Algorithm::edge_wilson:
      first_wilson = 0;
      break;
    case Algorithm::urn_tree:
    case Algorithm::seeded_tree:
      throw std::invalid_argument("branch extraction needs a random-walk trace");
  }
  for (std::size_t i = first_wilson; i < starts.size(); ++i)
    extract_wilson_segment(trace, starts[i], seg_end(i), covered, tree_size, out, marks);

  if (!trace.marks.empty() && !same_marks(marks, trace.marks)) malformed("marks disagree with the vertex sequence");
  return out;
}

}  // namespace ustlab
