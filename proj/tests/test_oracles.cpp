#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ustlab/algorithms.hpp"
#include "ustlab/oracles.hpp"

using namespace ustlab;
using doctest::Approx;

namespace {

Graph g0() { return from_edge_list("0 1\n1 2\n1 3\n2 3"); }
Graph square_diagonal() { return from_edge_list("0 1\n0 2\n1 2\n1 3\n2 3"); }

Tree edge_tree(Vertex a, Vertex b) { return Tree::from_edges({make_edge(a, b)}); }

// Connected sub-trees of g with at most max_edges edges, built by growth.
std::vector<Tree> small_subtrees(const Graph& g, std::size_t max_edges) {
  std::set<std::vector<Edge>> seen;
  std::vector<Tree> out, frontier;
  for (const auto& e : g.edges()) {
    Tree t = edge_tree(e.u, e.v);
    if (seen.insert(t.edges()).second) frontier.push_back(t);
  }
  for (std::size_t size = 1; size <= max_edges; ++size) {
    std::vector<Tree> next;
    for (const auto& t : frontier) {
      out.push_back(t);
      if (size == max_edges) continue;
      for (const auto& e : g.edges()) {
        if (t.contains_vertex(e.u) == t.contains_vertex(e.v)) continue;
        auto edges = t.edges();
        edges.push_back(e);
        Tree grown = Tree::from_edges(edges);
        if (seen.insert(grown.edges()).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(cycle_graph(5)) == 5);
  CHECK(spanning_tree_count(complete_graph(5)) == 125);
  CHECK(spanning_tree_count(g0()) == 3);
  CHECK(spanning_tree_count(complete_graph(5, true)) == 125);
  CHECK(spanning_tree_count(from_edge_list("0 0")) == 1);
  for (std::size_t n = 2; n <= 9; ++n) {
    BigInt expect = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) expect *= n;
    CHECK(spanning_tree_count(complete_graph(n)) == expect);
  }
  CHECK(spanning_tree_count(hypercube_graph(3)) == 384);
  CHECK(spanning_tree_count(complete_bipartite_graph(3, 3)) == 81);
  BigInt big = 1;
  for (int i = 0; i < 28; ++i) big *= 30;
  CHECK(spanning_tree_count(complete_graph(30)) == big);
}

TEST_CASE("weighted count of a collapsed graph") {
  const auto c = collapse(complete_graph(4), edge_tree(0, 1));
  CHECK(weighted_spanning_tree_count(c.graph) == Approx(8.0));
  CHECK(spanning_tree_count(c.graph) == 8);
  CHECK(weighted_spanning_tree_count(from_edge_list("0 1 0.5\n1 2 0.25\n0 2 2")) == Approx(0.5 * 0.25 + 0.25 * 2 + 0.5 * 2));
}

TEST_CASE("enumeration of the square-plus-diagonal graph") {
  const auto index = enumerate_spanning_trees(square_diagonal());
  REQUIRE(index.size() == 8);
  const Edge diagonal = make_edge(1, 2);
  std::vector<std::size_t> with_diagonal;
  for (std::size_t s = 0; s < 8; ++s)
    if (index.tree(s).contains_edge(diagonal)) with_diagonal.push_back(s + 1);
  CHECK(with_diagonal == std::vector<std::size_t>{3, 4, 6, 7});
  for (std::size_t s = 0; s < 8; ++s) {
    CHECK(index.find(index.tree(s)) == s);
    if (s > 0) CHECK(index.tree(s - 1).edges() < index.tree(s).edges());
  }
  std::ostringstream dump;
  index.write(dump);
  CHECK(dump.str().rfind("0-1 0-2 1-3\n", 0) == 0);
}

TEST_CASE("enumeration matches the determinant") {
  for (const Graph& g : {complete_graph(4), complete_graph(6), cycle_graph(7), hypercube_graph(3), grid_graph(3, 3),
                         complete_bipartite_graph(3, 3), g0(), square_diagonal(), from_edge_list("0 1\n1 2")}) {
    CHECK(BigInt(enumerate_spanning_trees(g).size()) == spanning_tree_count(g));
  }
  CHECK(enumerate_spanning_trees(complete_graph(4)).size() == 16);
  CHECK(enumerate_spanning_trees(from_edge_list("0 1\n1 2")).size() == 1);
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(8), 1000), std::length_error);
}

TEST_CASE("count of trees containing a sub-tree") {
  const Graph sd = square_diagonal();
  CHECK(count_trees_containing(sd, edge_tree(1, 2)) == 4);
  for (const auto& e : sd.edges())
    if (e != make_edge(1, 2)) CHECK(count_trees_containing(sd, edge_tree(e.u, e.v)) == 5);
  for (std::size_t n = 4; n <= 8; ++n) {
    const Graph c = cycle_graph(n);
    std::vector<Edge> es;
    for (std::size_t e = 1; e < n; ++e) {
      es.push_back(make_edge(static_cast<Vertex>(e - 1), static_cast<Vertex>(e)));
      CHECK(count_trees_containing(c, Tree::from_edges(es)) == n - e);
    }
  }
}

TEST_CASE("collapse count equals filtered enumeration") {
  for (const Graph& g : {complete_graph(5), cycle_graph(8), hypercube_graph(3), grid_graph(3, 2), g0(),
                         square_diagonal(), complete_bipartite_graph(3, 4), complete_graph(6, true)}) {
    const auto index = enumerate_spanning_trees(g);
    for (const Tree& t : small_subtrees(g, 3)) {
      std::size_t direct = 0;
      for (const auto& s : index.trees()) direct += s.contains(t);
      CHECK(count_trees_containing(g, t) == direct);
    }
  }
}

TEST_CASE("hitting times on complete graphs") {
  for (std::size_t n : {3, 4, 6, 9}) {
    const auto h = hitting_stats(complete_graph(n, true));
    CHECK(h.vertex(0, 1) == Approx(static_cast<double>(n)));
    CHECK(h.vertex(1, 1) == 0.0);
    CHECK(h.omega == Approx(static_cast<double>(n)));
    const auto plain = hitting_stats(complete_graph(n));
    CHECK(plain.vertex(2, 0) == Approx(static_cast<double>(n - 1)));
  }
}

TEST_CASE("hitting times on K3,3 and C5") {
  const auto h = hitting_stats(complete_bipartite_graph(3, 3));
  CHECK(h.omega == Approx(5.5));
  CHECK(h.vertex(0, 3) == Approx(5.0));
  const auto c = hitting_stats(cycle_graph(5));
  CHECK(c.vertex(0, 1) == Approx(4.0));
  CHECK(c.vertex(0, 2) == Approx(6.0));
}

TEST_CASE("hitting times satisfy the first-step equations") {
  for (const Graph& g : {complete_graph(5, true), cycle_graph(6), hypercube_graph(3), g0(), square_diagonal(),
                         grid_graph(3, 3), from_edge_list("0 1 2\n1 2 1\n0 2 0.5\n2 2 1")}) {
    const auto h = hitting_stats(g);
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) {
        if (i == j) continue;
        double rhs = 1.0;
        for (const auto& nb : g.neighbors(i)) rhs += nb.weight / g.degree(i) * h.vertex(static_cast<std::size_t>(nb.to), static_cast<std::size_t>(j));
        CHECK(std::abs(h.vertex(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) - rhs) < 1e-9);
      }
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      const auto [u, v] = h.edges[e];
      for (Vertex i = 0; i < n; ++i) {
        const auto si = static_cast<std::size_t>(i);
        if (i == u || i == v) {
          CHECK(h.edge(si, e) == 0.0);
          continue;
        }
        double rhs = 1.0, prob = 0.0;
        for (const auto& nb : g.neighbors(i)) {
          const double p = nb.weight / g.degree(i);
          rhs += p * h.edge(static_cast<std::size_t>(nb.to), e);
          prob += p * h.first_v(static_cast<std::size_t>(nb.to), e);
        }
        CHECK(std::abs(h.edge(si, e) - rhs) < 1e-9);
        CHECK(std::abs(h.first_v(si, e) - prob) < 1e-9);
      }
    }
  }
}

TEST_CASE("half of the stationary mass hits v before u on vertex-transitive graphs") {
  for (const Graph& g : {complete_graph(6), complete_graph(5, true), cycle_graph(7), hypercube_graph(3)}) {
    const auto h = hitting_stats(g);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      double mass = 0.0;
      for (std::size_t i = 0; i < h.n; ++i) mass += h.stationary[i] * h.first_v(i, e);
      CHECK(mass == Approx(0.5));
    }
  }
}

TEST_CASE("speed-up identity") {
  for (const Graph& g : {complete_graph(6), hypercube_graph(3), cycle_graph(8)}) {
    const auto r = speedup_residual(g);
    CHECK(r.general < 1e-9);
    REQUIRE(r.transitive.has_value());
    CHECK(*r.transitive < 1e-9);
  }
  const auto sd = speedup_residual(square_diagonal());
  CHECK(sd.general < 1e-9);
  CHECK_FALSE(sd.transitive.has_value());
  CHECK(speedup_residual(complete_bipartite_graph(3, 3)).general < 1e-9);
  CHECK(speedup_residual(g0()).general < 1e-9);
}

TEST_CASE("transitive solves agree with the full matrices") {
  for (const Graph& g : {hypercube_graph(4), complete_graph(7), cycle_graph(9)}) {
    const auto full = hitting_stats(g);
    const auto t = transitive_hitting(g);
    CHECK(t.kemeny == Approx(full.kemeny));
    CHECK(t.omega == Approx(full.omega));
    CHECK(t.phi_zero == Approx(full.phi_zero));
    CHECK(t.phi == Approx(full.phi));
    CHECK(t.omega - t.phi == Approx(t.adjacent_hitting / 2.0));
    CHECK(t.first_hit_mass == Approx(0.5));
  }
  const auto q3 = transitive_hitting(hypercube_graph(3));
  CHECK(q3.kemeny == Approx(7.25));
  CHECK(q3.adjacent_hitting == Approx(7.0));
  CHECK(q3.phi_zero == Approx(3.75));
}

TEST_CASE("stage-one residuals") {
  auto uniform_edges = [](const Graph& g) {
    SubtreeLaw law;
    for (const auto& e : g.edges()) add_mass(law, edge_tree(e.u, e.v), 1.0 / static_cast<double>(g.edge_count()));
    return law;
  };
  CHECK(stage_one_residual(cycle_graph(4), uniform_edges(cycle_graph(4))) < 1e-12);
  const auto rep = stage_one(square_diagonal(), uniform_edges(square_diagonal()));
  CHECK(rep.residual == Approx(0.01));
  for (std::size_t s = 0; s < rep.index.size(); ++s)
    CHECK(rep.value[s] == Approx(rep.index.tree(s).contains_edge(make_edge(1, 2)) ? 0.13 : 0.12));
  for (std::size_t n = 5; n <= 8; ++n) CHECK(stage_one_residual(cycle_graph(n), cycle_first_branch_law(n)) < 1e-12);
  SubtreeLaw bad;
  add_mass(bad, edge_tree(0, 1), 0.5);
  CHECK_THROWS(stage_one(cycle_graph(4), bad));
}

TEST_CASE("cycle first-branch law matches simulation") {
  const std::size_t n = 5;
  const auto law = cycle_first_branch_law(n);
  const Graph c = cycle_graph(n);
  std::map<std::vector<Edge>, int> count;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    RngStream rng(41, static_cast<std::uint64_t>(i));
    const auto res = aldous_broder(c, std::nullopt, rng);
    ++count[partial_tree(Tree::single_vertex(res.trace.vertices.front()), res.branches, 1).edges()];
  }
  double total = 0.0;
  for (const auto& [key, entry] : law) {
    total += entry.second;
    const double f = count[key] / static_cast<double>(N);
    CHECK(std::abs(f - entry.second) < 4.0 * std::sqrt(entry.second * (1 - entry.second) / N) + 1e-12);
  }
  CHECK(total == Approx(1.0));
  const Tree two = Tree::from_edges({make_edge(0, 1), make_edge(1, 2)});
  CHECK(law.at(two.edges()).second == Approx(0.05));
}

TEST_CASE("cycle walk sub-tree checks") {
  RngStream rng(42, 0);
  const auto k1 = cycle_rw_subtree_check(5, 1, 20000, rng);
  CHECK(k1.exact_residual < 1e-12);
  CHECK(k1.distinct == 5);
  CHECK(stage_one_residual(cycle_graph(6), cycle_walk_subtree_law(6, 3)) < 1e-12);
  const auto k3 = cycle_rw_subtree_check(6, 3, 100000, rng);
  CHECK(k3.residual <= 3.0 * k3.standard_error);
  CHECK_THROWS(cycle_rw_subtree_check(13, 1, 10, rng));
}

TEST_CASE("collapsed Wilson check") {
  RngStream rng(43, 0);
  const auto k4 = collapsed_wilson_check(complete_graph(4), edge_tree(0, 1), 100000, rng);
  CHECK(k4.targets == 8);
  CHECK(k4.tv() < 0.02);
  const Tree spanning = Tree::from_edges({make_edge(0, 1), make_edge(1, 2), make_edge(2, 3), make_edge(3, 4)});
  const auto full = collapsed_wilson_check(cycle_graph(5), spanning, 100, rng);
  CHECK(full.targets == 1);
  CHECK(full.tv() == 0.0);
}

TEST_CASE("isomorphic sub-tree counts") {
  const Tree claw = Tree::from_edges({make_edge(0, 1), make_edge(0, 2), make_edge(0, 3)});
  const Tree star = Tree::from_edges({make_edge(0, 1), make_edge(0, 2), make_edge(0, 3), make_edge(0, 4)});
  const Tree chair = Tree::from_edges({make_edge(0, 1), make_edge(0, 2), make_edge(0, 3), make_edge(3, 4)});
  const Tree path = Tree::from_edges({make_edge(0, 1), make_edge(1, 2), make_edge(2, 3), make_edge(3, 4)});
  CHECK(count_isomorphic_subtrees(star, claw) == 4);
  CHECK(count_isomorphic_subtrees(chair, claw) == 1);
  CHECK(count_isomorphic_subtrees(path, claw) == 0);
  CHECK(count_isomorphic_subtrees(path, edge_tree(7, 8)) == 4);
  CHECK(count_isomorphic_subtrees(star, Tree::single_vertex(0)) == 5);
  CHECK(count_isomorphic_subtrees(path, Tree::from_edges({make_edge(0, 1), make_edge(1, 2)})) == 3);
  CHECK(canonical_shape(chair) != canonical_shape(path));
  const Tree relabeled = Tree::from_edges({make_edge(4, 2), make_edge(4, 1), make_edge(4, 3), make_edge(3, 0)});
  CHECK(canonical_shape(chair) == canonical_shape(relabeled));
}
