#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "ustlab/graph.hpp"
#include "ustlab/rng.hpp"
#include "ustlab/tree.hpp"
#include "ustlab/walk.hpp"

using namespace ustlab;

TEST_CASE("Philox4x32-10 known answers") {
  using B = RngStream::Block;
  CHECK(RngStream::philox({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(RngStream::philox({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(RngStream::philox({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::vector<std::uint64_t> xa, xb, xc, xd;
  for (int i = 0; i < 100; ++i) {
    xa.push_back(a.next_u64());
    xb.push_back(b.next_u64());
    xc.push_back(c.next_u64());
    xd.push_back(d.next_u64());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  CHECK(xa != xd);
  RngStream first(0, 0);
  const auto block = RngStream::philox({0, 0, 0, 0}, {0, 0});
  CHECK(first.next_u64() == ((std::uint64_t{block[1]} << 32) | block[0]));
  CHECK(first.next_u64() == ((std::uint64_t{block[3]} << 32) | block[2]));
}

TEST_CASE("uniform draws") {
  RngStream rng(1, 0);
  std::vector<int> hist(7, 0);
  const int N = 700000;
  for (int i = 0; i < N; ++i) {
    const auto x = rng.uniform_index(7);
    REQUIRE(x < 7);
    ++hist[x];
  }
  const double p = 1.0 / 7.0, se = std::sqrt(N * p * (1 - p));
  for (int h : hist) CHECK(std::abs(h - N * p) < 4.0 * se);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(rng.uniform_index(1) == 0);
}

namespace {

// Every empirical transition frequency from v within 3 standard errors.
void check_step_law(const Graph& g, Vertex v, int samples, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::map<Vertex, int> count;
  for (int i = 0; i < samples; ++i) ++count[step(g, v, rng)];
  for (const auto& nb : g.neighbors(v)) {
    const double p = nb.weight / g.degree(v);
    const double se = std::sqrt(p * (1 - p) / samples);
    CHECK(std::abs(count[nb.to] / static_cast<double>(samples) - p) < 3.0 * se);
    count.erase(nb.to);
  }
  CHECK(count.empty());
}

}  // namespace

TEST_CASE("step on complete graph with self-loops is uniform over n choices") {
  const Graph g = complete_graph(4, true);
  check_step_law(g, 2, 400000, 3);
  check_step_law(complete_graph(5, true), 0, 1000000, 4);
}

TEST_CASE("step on the collapsed K4 graph is weight-proportional") {
  const auto c = collapse(complete_graph(4), Tree::from_edges({make_edge(0, 1)}));
  const Vertex v2 = c.from_original[2];
  RngStream rng(5, 0);
  int to_merged = 0;
  const int N = 1000000;
  for (int i = 0; i < N; ++i) to_merged += step(c.graph, v2, rng) == c.merged;
  const double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / N);
  CHECK(std::abs(to_merged / static_cast<double>(N) - 2.0 / 3.0) < 3.0 * se);
  check_step_law(c.graph, v2, 1000000, 6);
}

TEST_CASE("step on C5") {
  const Graph g = cycle_graph(5);
  RngStream rng(9, 0);
  for (int i = 0; i < 1000; ++i) {
    const Vertex u = step(g, 0, rng);
    CHECK((u == 1 || u == 4));
  }
  check_step_law(g, 0, 200000, 10);
}

TEST_CASE("weighted step") {
  const Graph g = from_edge_list("0 1 1\n0 2 3\n1 2 1");
  check_step_law(g, 0, 400000, 11);
}

TEST_CASE("loop erasure examples") {
  using V = std::vector<Vertex>;
  CHECK(loop_erase(V{1, 2, 3, 2, 4}) == V{1, 2, 4});
  CHECK(loop_erase(V{7}) == V{7});
  CHECK(loop_erase(V{1, 2, 3, 1, 3, 4}) == V{1, 3, 4});
  CHECK(loop_erase(V{5, 5, 5}) == V{5});
}

TEST_CASE("loop erasure is simple, keeps the start and is idempotent") {
  RngStream rng(12, 0);
  const Graph g = grid_graph(4, 4);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Vertex> walk{static_cast<Vertex>(rng.uniform_index(16))};
    for (int t = 0; t < 60; ++t) walk.push_back(step(g, walk.back(), rng));
    const auto le = loop_erase(walk);
    CHECK(le.front() == walk.front());
    CHECK(le.back() == walk.back());
    std::vector<Vertex> sorted = le;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(loop_erase(le) == le);
  }
}

TEST_CASE("incremental loop-erased path reports erased counts") {
  LoopErasedPath p(10);
  CHECK(p.push(1) == 0);
  CHECK(p.push(2) == 0);
  CHECK(p.push(3) == 0);
  CHECK(p.size() == 3);
  CHECK(p.push(2) == 1);
  CHECK(p.size() == 2);
  CHECK_FALSE(p.contains(3));
  CHECK(p.push(2) == 0);
  CHECK(p.size() == 2);
  CHECK(p.push(4) == 0);
  CHECK(p.push(1) == 2);
  CHECK(p.size() == 1);
  CHECK(p.back() == 1);
  p.clear();
  CHECK(p.size() == 0);
  CHECK_FALSE(p.contains(1));
}

TEST_CASE("walk traces") {
  const Graph c5 = cycle_graph(5);
  WalkTrace t;
  t.start_segment(0);
  t.advance(1);
  t.advance(2);
  t.start_segment(4);
  t.advance(0);
  CHECK(t.steps == t.vertices.size() - t.segment_starts.size());
  CHECK(trace_consistent(c5, t));
  WalkTrace bad = t;
  bad.vertices[2] = 3;
  CHECK_FALSE(trace_consistent(c5, bad));
  WalkTrace marks = t;
  marks.mark(MarkKind::sigma_hat, 2, 1);
  marks.mark(MarkKind::sigma_hat, 1, 2);
  CHECK_FALSE(trace_consistent(c5, marks));
}
