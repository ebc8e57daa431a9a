#include <algorithm>
#include <numeric>

#include "ustlab/oracles.hpp"

namespace ustlab {

std::size_t TreeIndex::KeyHash::operator()(const std::vector<std::uint64_t>& k) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto w : k) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

TreeIndex::TreeIndex(const Graph& g, std::vector<Tree> trees) : host_edges_(g.edges()), trees_(std::move(trees)) {
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    auto [it, inserted] = ids_.emplace(key(trees_[i]), i);
    if (!inserted) throw std::invalid_argument("duplicate tree in index");
  }
}

std::vector<std::uint64_t> TreeIndex::key(const Tree& t) const {
  std::vector<std::uint64_t> k((host_edges_.size() + 63) / 64, 0);
  for (const auto& e : t.edges()) {
    auto it = std::lower_bound(host_edges_.begin(), host_edges_.end(), e);
    if (it == host_edges_.end() || *it != e) return {};
    auto id = static_cast<std::size_t>(it - host_edges_.begin());
    k[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  return k;
}

std::optional<std::size_t> TreeIndex::find(const Tree& t) const {
  auto k = key(t);
  if (k.empty() && !host_edges_.empty()) return std::nullopt;
  auto it = ids_.find(k);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void TreeIndex::write(std::ostream& out) const {
  for (const auto& t : trees_) {
    bool first = true;
    for (const auto& e : t.edges()) {
      if (!first) out << ' ';
      out << e.u << '-' << e.v;
      first = false;
    }
    out << '\n';
  }
}

namespace {

struct Enumerator {
  const std::vector<Edge>& edges;
  std::size_t n;
  std::size_t cap;
  std::vector<Edge> chosen;
  std::vector<Tree> out;

  std::size_t find(std::vector<std::size_t>& p, std::size_t x) const {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }

  // Whether chosen edges plus edges[from..] still connect every vertex.
  bool still_connected(const std::vector<std::size_t>& comp, std::size_t from) const {
    std::vector<std::size_t> p = comp;
    std::size_t components = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (find(p, v) == v) ++components;
    for (std::size_t j = from; j < edges.size() && components > 1; ++j) {
      auto a = find(p, static_cast<std::size_t>(edges[j].u)), b = find(p, static_cast<std::size_t>(edges[j].v));
      if (a != b) {
        p[a] = b;
        --components;
      }
    }
    return components == 1;
  }

  void run(std::size_t j, std::vector<std::size_t>& comp) {
    if (chosen.size() + 1 == n) {
      if (out.size() >= cap) throw std::length_error("spanning tree enumeration exceeded the cap");
      out.push_back(Tree(detail_vertices(), chosen));
      return;
    }
    if (j == edges.size()) return;
    auto a = find(comp, static_cast<std::size_t>(edges[j].u)), b = find(comp, static_cast<std::size_t>(edges[j].v));
    if (a != b) {
      std::vector<std::size_t> next = comp;
      next[a] = b;
      chosen.push_back(edges[j]);
      run(j + 1, next);
      chosen.pop_back();
    }
    if (still_connected(comp, j + 1)) run(j + 1, comp);
  }

  std::vector<Vertex> detail_vertices() const {
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), Vertex{0});
    return vs;
  }
};

}  // namespace

TreeIndex enumerate_spanning_trees(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  Enumerator en{g.edges(), n, cap, {}, {}};
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  en.run(0, comp);
  std::sort(en.out.begin(), en.out.end(), [](const Tree& a, const Tree& b) { return a.edges() < b.edges(); });
  return TreeIndex(g, std::move(en.out));
}

}  // namespace ustlab
