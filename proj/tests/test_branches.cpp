#include <doctest.h>

#include "ustlab/algorithms.hpp"
#include "ustlab/branches.hpp"

using namespace ustlab;

namespace {

WalkTrace walk(std::initializer_list<Vertex> vs) {
  WalkTrace t;
  bool first = true;
  for (Vertex v : vs) {
    if (first) t.start_segment(v);
    else t.advance(v);
    first = false;
  }
  return t;
}

}  // namespace

TEST_CASE("aldous-broder trace on a single edge") {
  const auto b = extract_branches(walk({0, 1}), Algorithm::aldous_broder);
  REQUIRE(b.size() == 1);
  CHECK(b[0].index == 1);
  CHECK(b[0].path == std::vector<Vertex>{1});
  CHECK(b[0].anchor == make_edge(0, 1));
  CHECK(b[0].attach == 0);
  CHECK(b[0].prior_size == 1);
}

TEST_CASE("wilson trace hitting the tree on the first step") {
  const auto b = extract_branches(walk({2, 0}), Algorithm::wilson, 1);
  REQUIRE(b.size() == 1);
  CHECK(b[0].path == std::vector<Vertex>{2});
  CHECK(b[0].anchor == make_edge(0, 2));
  CHECK(b[0].length() == 1);
  CHECK(b[0].t_stop == 1);
}

TEST_CASE("first two aldous-broder branches on the 5x5 grid") {
  const Graph grid = grid_graph(5, 5);
  // Start at 16; the first branch closes on the return to 19, the second
  // opens at 13 and closes on the return to 13.
  const WalkTrace t = walk({16, 17, 18, 19, 24, 19, 18, 13, 14, 9, 8, 13});
  REQUIRE(trace_consistent(grid, t));
  const auto b = extract_branches(t, Algorithm::aldous_broder);
  REQUIRE(b.size() >= 2);
  CHECK(b[0].path == std::vector<Vertex>{17, 18, 19, 24});
  CHECK(b[0].anchor == make_edge(16, 17));
  CHECK(b[0].t_start == 1);
  CHECK(b[0].t_stop == 5);
  CHECK(b[1].path == std::vector<Vertex>{13, 14, 9, 8});
  CHECK(b[1].anchor == make_edge(18, 13));
  CHECK(b[1].t_start == 7);
  CHECK(b[1].t_stop == 11);
  CHECK(b[1].prior_size == 5);
  const Tree two = partial_tree(Tree::single_vertex(16), b, 2);
  CHECK(two.size() == 9);
  CHECK(is_subtree_of(grid, two));
}

TEST_CASE("wilson trace with loops") {
  // Tree {0}; the first walk 3-4-3-2-1-0 erases the 4 loop.
  WalkTrace t = walk({3, 4, 3, 2, 1, 0});
  t.start_segment(4);
  t.advance(3);
  const auto b = extract_branches(t, Algorithm::wilson, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].path == std::vector<Vertex>{3, 2, 1});
  CHECK(b[0].anchor == make_edge(1, 0));
  CHECK(b[1].path == std::vector<Vertex>{4});
  CHECK(b[1].anchor == make_edge(3, 4));
  CHECK(b[1].prior_size == 4);
}

TEST_CASE("branch lengths sum to n - 1 on every run") {
  const Graph g = complete_graph(10, true);
  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStream rng(21, s);
    for (const auto& res : {aldous_broder(g, std::nullopt, rng), wilson(g, Tree{}, rng), hybrid(g, 2, rng),
                            urn_tree(10, 0, rng)}) {
      std::size_t total = 0;
      for (const auto& b : res.branches) total += b.length();
      CHECK(total + 1 == g.vertex_count());
    }
  }
}

TEST_CASE("marks agree with branch reconstruction") {
  const Graph g = hypercube_graph(3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    RngStream rng(22, s);
    const auto ab = aldous_broder(g, std::nullopt, rng);
    const auto again = extract_branches(ab.trace, Algorithm::aldous_broder);
    REQUIRE(again.size() == ab.branches.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
      CHECK(again[i].path == ab.branches[i].path);
      CHECK(again[i].t_start == ab.branches[i].t_start);
      CHECK(again[i].t_stop == ab.branches[i].t_stop);
    }
    const auto outs = ab.trace.marks_of(MarkKind::sigma_out);
    const auto ins = ab.trace.marks_of(MarkKind::sigma_in);
    REQUIRE(outs.size() == ab.branches.size());
    REQUIRE(ins.size() == ab.branches.size());
    for (std::size_t i = 0; i < outs.size(); ++i) {
      CHECK(outs[i].index < ins[i].index);
      if (i + 1 < outs.size()) CHECK(ins[i].index < outs[i + 1].index);
    }
    const auto hy = hybrid(complete_graph(6, true), 2, rng);
    const auto hb = extract_branches(hy.trace, Algorithm::hybrid);
    REQUIRE(hb.size() == hy.branches.size());
    for (std::size_t i = 0; i < hb.size(); ++i) CHECK(hb[i].path == hy.branches[i].path);
  }
}

TEST_CASE("malformed traces are rejected") {
  WalkTrace two = walk({0, 1});
  two.start_segment(2);
  CHECK_THROWS(extract_branches(two, Algorithm::aldous_broder));
  CHECK_THROWS(extract_branches(walk({2, 0, 1, 0}), Algorithm::wilson, 1));
  WalkTrace enters = walk({2, 0});
  enters.start_segment(3);
  enters.advance(2);
  enters.advance(0);
  CHECK_THROWS(extract_branches(enters, Algorithm::wilson, 1));
  CHECK_THROWS(extract_branches(walk({0, 1}), Algorithm::urn_tree));
  WalkTrace wrong = walk({0, 1, 0});
  wrong.mark(MarkKind::sigma_out, 1, 1);
  wrong.mark(MarkKind::sigma_in, 1, 1);
  CHECK_THROWS(extract_branches(wrong, Algorithm::aldous_broder));
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("aldous-broder") == Algorithm::aldous_broder);
  CHECK(parse_algorithm("aldous_broder") == Algorithm::aldous_broder);
  CHECK(parse_algorithm("ab") == Algorithm::aldous_broder);
  CHECK(parse_algorithm("edge-wilson") == Algorithm::edge_wilson);
  CHECK(parse_algorithm("urn") == Algorithm::urn_tree);
  CHECK(parse_algorithm("seeded") == Algorithm::seeded_tree);
  CHECK_THROWS(parse_algorithm("kruskal"));
  for (auto a : {Algorithm::aldous_broder, Algorithm::wilson, Algorithm::urn_tree, Algorithm::hybrid,
                 Algorithm::edge_wilson, Algorithm::seeded_tree})
    CHECK(parse_algorithm(algorithm_name(a)) == a);
}
