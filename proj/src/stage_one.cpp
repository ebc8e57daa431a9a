#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "ustlab/algorithms.hpp"
#include "ustlab/oracles.hpp"

namespace ustlab {

void add_mass(SubtreeLaw& law, const Tree& t, double p) {
  auto [it, inserted] = law.try_emplace(t.edges(), t, 0.0);
  it->second.second += p;
}

StageOneReport stage_one(const Graph& g, const SubtreeLaw& law) {
  double total = 0.0;
  for (const auto& [key, entry] : law) {
    if (entry.second < 0.0) throw std::invalid_argument("sub-tree law has a negative mass");
    require_subtree(g, entry.first);
    total += entry.second;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("sub-tree law is not normalized");
  StageOneReport rep;
  rep.index = enumerate_spanning_trees(g);
  const auto& trees = rep.index.trees();
  rep.value.assign(trees.size(), 0.0);
  std::vector<std::size_t> holders;
  for (const auto& [key, entry] : law) {
    holders.clear();
    for (std::size_t s = 0; s < trees.size(); ++s)
      if (trees[s].contains(entry.first)) holders.push_back(s);
    for (auto s : holders) rep.value[s] += entry.second / static_cast<double>(holders.size());
  }
  auto [lo, hi] = std::minmax_element(rep.value.begin(), rep.value.end());
  rep.residual = rep.value.empty() ? 0.0 : *hi - *lo;
  return rep;
}

double stage_one_residual(const Graph& g, const SubtreeLaw& law) { return stage_one(g, law).residual; }

namespace {

Tree cycle_arc(std::size_t n, std::size_t start, std::size_t edges) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i <= edges; ++i) vs.push_back(static_cast<Vertex>((start + i) % n));
  for (std::size_t i = 0; i < edges; ++i)
    es.push_back(make_edge(static_cast<Vertex>((start + i) % n), static_cast<Vertex>((start + i + 1) % n)));
  return Tree(std::move(vs), std::move(es));
}

}  // namespace

SubtreeLaw cycle_first_branch_law(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  SubtreeLaw law;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t e = 1; e <= n - 1; ++e) {
    // A path that stops short of covering needs a reversal; the spanning
    // path ends at cover.
    const double p = e + 1 < n ? inv_n * std::ldexp(1.0, -static_cast<int>(e))
                               : inv_n * std::ldexp(1.0, -static_cast<int>(n - 2));
    for (std::size_t a = 0; a < n; ++a) add_mass(law, cycle_arc(n, a, e), p);
  }
  return law;
}

SubtreeLaw cycle_walk_subtree_law(std::size_t n, std::size_t k) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  // State: covered arc [-l, r] around the start and the walker offset.
  struct State {
    std::size_t l, r;
    long pos;
    auto operator<=>(const State&) const = default;
  };
  std::map<State, double> cur{{State{0, 0, 0}, 1.0}};
  std::map<std::pair<std::size_t, std::size_t>, double> done;
  for (std::size_t t = 0; t < k && !cur.empty(); ++t) {
    std::map<State, double> next;
    for (const auto& [s, p] : cur) {
      for (long d : {-1L, 1L}) {
        State q = s;
        q.pos += d;
        if (q.pos < -static_cast<long>(q.l)) q.l += 1;
        if (q.pos > static_cast<long>(q.r)) q.r += 1;
        if (q.l + q.r + 1 == n) done[{q.l, q.r}] += p / 2.0;
        else next[q] += p / 2.0;
      }
    }
    cur = std::move(next);
  }
  for (const auto& [s, p] : cur) done[{s.l, s.r}] += p;
  SubtreeLaw law;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (const auto& [lr, p] : done) {
    const auto [l, r] = lr;
    for (std::size_t s = 0; s < n; ++s) add_mass(law, cycle_arc(n, (s + n - l) % n, l + r), p * inv_n);
  }
  return law;
}

CollapsedCheck collapsed_wilson_check(const Graph& g, const Tree& t, std::size_t samples, RngStream& rng) {
  const auto index = enumerate_spanning_trees(g);
  std::vector<std::size_t> targets;
  std::vector<std::ptrdiff_t> slot(index.size(), -1);
  for (std::size_t s = 0; s < index.size(); ++s) {
    if (!index.tree(s).contains(t)) continue;
    slot[s] = static_cast<std::ptrdiff_t>(targets.size());
    targets.push_back(s);
  }
  const auto c = collapse(g, t);
  std::vector<std::uint64_t> hist_collapsed(targets.size(), 0), hist_plain(targets.size(), 0);
  auto record = [&](std::vector<std::uint64_t>& hist, const Tree& tree) {
    auto id = index.find(tree);
    if (!id || slot[*id] < 0) throw std::logic_error("collapsed check produced a tree outside the target set");
    ++hist[static_cast<std::size_t>(slot[*id])];
  };
  const Tree merged_root = Tree::single_vertex(c.merged);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto res = wilson(c.graph, merged_root, rng);
    std::vector<Edge> edges = t.edges();
    for (const auto& e : res.tree.edges()) {
      if (e.u == c.merged || e.v == c.merged) {
        const Vertex other = e.u == c.merged ? e.v : e.u;
        const auto& options = c.boundary[static_cast<std::size_t>(other)];
        std::vector<double> w;
        for (const auto& o : options) w.push_back(g.weight(o.u, o.v));
        double x = rng.uniform01() * std::accumulate(w.begin(), w.end(), 0.0);
        std::size_t pick = 0;
        while (pick + 1 < w.size() && x >= w[pick]) x -= w[pick++];
        edges.push_back(options[pick]);
      } else {
        edges.push_back(c.original_edge(e));
      }
    }
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    record(hist_collapsed, Tree(std::move(all), std::move(edges)));
    record(hist_plain, wilson(g, t, rng).tree);
  }
  CollapsedCheck out;
  out.targets = targets.size();
  const double expect = 1.0 / static_cast<double>(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    out.tv_collapsed += std::abs(static_cast<double>(hist_collapsed[j]) / static_cast<double>(samples) - expect);
    out.tv_plain += std::abs(static_cast<double>(hist_plain[j]) / static_cast<double>(samples) - expect);
  }
  out.tv_collapsed /= 2.0;
  out.tv_plain /= 2.0;
  return out;
}

namespace {

// First-entrance tree of a walk on C_n at time min(k, cover).
Tree cycle_walk_tree(std::size_t n, std::size_t k, RngStream& rng) {
  const auto start = static_cast<long>(rng.uniform_index(n));
  long l = 0, r = 0, pos = 0;
  for (std::size_t t = 0; t < k && static_cast<std::size_t>(l + r + 1) < n; ++t) {
    pos += (rng.next_u64() >> 63) ? 1 : -1;
    l = std::max(l, -pos);
    r = std::max(r, pos);
  }
  const auto nl = static_cast<long>(n);
  return cycle_arc(n, static_cast<std::size_t>(((start - l) % nl + nl) % nl), static_cast<std::size_t>(l + r));
}

}  // namespace

CycleCheck cycle_rw_subtree_check(std::size_t n, std::size_t k, std::size_t samples, RngStream& rng) {
  if (n < 3 || n > 12) throw GraphError("cycle_rw_subtree_check needs 3 <= n <= 12");
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const Graph g = cycle_graph(n);
  CycleCheck out;
  out.exact_residual = stage_one_residual(g, cycle_walk_subtree_law(n, k));

  std::map<std::vector<Edge>, std::pair<Tree, std::uint64_t>> counts;
  for (std::size_t i = 0; i < samples; ++i) {
    Tree t = cycle_walk_tree(n, k, rng);
    auto [it, inserted] = counts.try_emplace(t.edges(), t, 0);
    ++it->second.second;
  }
  out.distinct = counts.size();
  SubtreeLaw law;
  const auto N = static_cast<double>(samples);
  for (const auto& [key, entry] : counts) add_mass(law, entry.first, static_cast<double>(entry.second) / N);
  const auto rep = stage_one(g, law);
  out.residual = rep.residual;

  // F(S) - F(S') is a sample mean of w(S,Y) - w(S',Y), w(S,Y) = [Y in S] / |T(Y)|.
  const auto& trees = rep.index.trees();
  struct Cell {
    double p;
    std::vector<char> inside;
    double inv_count;
  };
  std::vector<Cell> cells;
  for (const auto& [key, entry] : law) {
    Cell c{entry.second, std::vector<char>(trees.size(), 0), 0.0};
    std::size_t holders = 0;
    for (std::size_t s = 0; s < trees.size(); ++s)
      if (trees[s].contains(entry.first)) {
        c.inside[s] = 1;
        ++holders;
      }
    c.inv_count = 1.0 / static_cast<double>(holders);
    cells.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < trees.size(); ++a)
    for (std::size_t b = a + 1; b < trees.size(); ++b) {
      double mean = 0.0, second = 0.0;
      for (const auto& c : cells) {
        const double d = (static_cast<double>(c.inside[a]) - static_cast<double>(c.inside[b])) * c.inv_count;
        mean += c.p * d;
        second += c.p * d * d;
      }
      const double var = std::max(0.0, second - mean * mean);
      out.standard_error = std::max(out.standard_error, std::sqrt(var / N));
    }
  return out;
}

}  // namespace ustlab
