#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <sstream>

#include "ustlab/csv.hpp"
#include "ustlab/harness.hpp"

using namespace ustlab;
using doctest::Approx;

namespace {

ExperimentConfig make(Algorithm a, GraphSpec g, std::size_t replicas, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.algorithm = a;
  cfg.graph = std::move(g);
  cfg.replicas = replicas;
  cfg.seed = seed;
  return cfg;
}

GraphSpec g0() { return GraphSpec::from_text("0 1\n1 2\n1 3\n2 3\n", "g0.txt"); }

Tree path(std::vector<Vertex> vs) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) es.push_back(make_edge(vs[i], vs[i + 1]));
  return Tree(std::move(vs), std::move(es));
}

}  // namespace

TEST_CASE("statistics helpers") {
  const std::vector<std::uint64_t> obs{50, 50};
  const std::vector<double> p{0.5, 0.5};
  CHECK(chi_square(obs, p).statistic == 0.0);
  CHECK(chi_square(obs, p).p_value == Approx(1.0));
  CHECK(chi_square(obs, p).dof == 1);
  const std::vector<std::uint64_t> skew{90, 10};
  CHECK(chi_square(skew, p).statistic == Approx(64.0));
  CHECK(chi_square(skew, p).p_value < 1e-10);
  CHECK(tv_distance(skew, p) == Approx(0.4));
  const std::vector<double> z{1.0, 0.0};
  CHECK(std::isinf(chi_square(obs, z).statistic));
  const std::vector<std::uint64_t> v{1, 2, 3, 4};
  const auto s = summarize(v);
  CHECK(s.mean == Approx(2.5));
  CHECK(s.sd == Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
  CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
  CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
  CHECK(fixed(2.0 / 3.0) == "0.666667");
}

TEST_CASE("graph specs and config hashing") {
  const auto spec = GraphSpec::of(Family::complete_self_loops, {7});
  CHECK(spec.label() == "complete_self_loops(7)");
  CHECK(spec.build().vertex_count() == 7);
  CHECK(g0().build().edge_count() == 4);
  CHECK(g0().label() != GraphSpec::from_text("0 1\n", "x").label());
  auto a = make(Algorithm::wilson, spec, 10, 1);
  auto b = a;
  b.threads = 4;
  CHECK(a.hash() == b.hash());
  b.seed = 2;
  CHECK(a.hash() != b.hash());
  b = a;
  b.root = 0;
  CHECK(a.hash() != b.hash());
  a.replicas = 0;
  CHECK_THROWS(a.validate());
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(1000, 4, [&](std::size_t, std::size_t i) { ++hits[i]; });
  for (auto& h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(100, 3,
                               [](std::size_t, std::size_t i) {
                                 if (i == 42) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("worker count honours USTLAB_THREADS as a cap") {
  CHECK(worker_count(5) == 5);
  ::setenv("USTLAB_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  ::unsetenv("USTLAB_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("steps experiment is independent of the worker count") {
  auto cfg = make(Algorithm::hybrid, GraphSpec::of(Family::complete_self_loops, {60}), 300, 5);
  cfg.record_curve = true;
  cfg.branches = 2;
  cfg.threads = 1;
  const auto one = run_steps_experiment(cfg);
  cfg.threads = 4;
  const auto four = run_steps_experiment(cfg);
  CHECK(one.steps == four.steps);
  CHECK(one.curve == four.curve);
  std::ostringstream x, y;
  write_steps_csv(x, cfg, 60, one);
  write_curve_csv(x, cfg, one);
  write_steps_csv(y, cfg, 60, four);
  write_curve_csv(y, cfg, four);
  CHECK(x.str() == y.str());
}

TEST_CASE("step curve invariants") {
  for (auto algo : {Algorithm::aldous_broder, Algorithm::wilson, Algorithm::hybrid, Algorithm::urn_tree,
                    Algorithm::edge_wilson}) {
    auto cfg = make(algo, GraphSpec::of(Family::complete_self_loops, {40}), 200, 6);
    cfg.record_curve = true;
    const auto st = run_steps_experiment(cfg);
    REQUIRE(st.curve.size() == 39);
    CHECK(std::is_sorted(st.curve.begin(), st.curve.end()));
    CHECK(st.curve.back() == Approx(st.summary.mean));
    CHECK(st.curve.front() >= (algo == Algorithm::edge_wilson ? 0.0 : 1.0));
    CHECK(st.summary.mean >= static_cast<double>(st.summary.min));
    CHECK(st.summary.mean <= static_cast<double>(st.summary.max));
  }
}

TEST_CASE("Wilson spends about half its steps on the first branch") {
  for (const auto& spec : {GraphSpec::of(Family::complete_self_loops, {300}), GraphSpec::of(Family::hypercube, {9})}) {
    const auto st = run_steps_experiment(make(Algorithm::wilson, spec, 20000, 7));
    CHECK(st.first_steps.mean == Approx(st.summary.mean / 2.0).epsilon(0.05));
  }
}

TEST_CASE("uniformity experiments") {
  const auto k5 = run_uniformity_experiment(make(Algorithm::wilson, GraphSpec::of(Family::complete, {5}), 200000, 8),
                                            UniformityTarget::all());
  CHECK(k5.index.size() == 125);
  CHECK(k5.tv < 0.015);
  CHECK(k5.chi.p_value > 0.001);
  std::uint64_t total = 0;
  for (auto o : k5.observed) total += o;
  CHECK(total == k5.samples);

  const auto sd = run_uniformity_experiment(
      make(Algorithm::edge_wilson, GraphSpec::from_text("0 1\n0 2\n1 2\n1 3\n2 3\n", "sd"), 200000, 9),
      UniformityTarget::all());
  CHECK(sd.chi.p_value < 1e-6);

  auto cond = make(Algorithm::wilson, GraphSpec::of(Family::cycle, {5}), 100000, 10);
  cond.initial = path({0, 1, 2});
  const auto c5 = run_uniformity_experiment(cond, UniformityTarget::containing(path({0, 1, 2})));
  double support = 0.0;
  for (double p : c5.expected) support += p > 0.0;
  CHECK(support == 3.0);
  CHECK(c5.tv < 0.01);
  CHECK(c5.chi.p_value > 0.001);
}

TEST_CASE("chi-square does not reject proven generators on the small-graph suite") {
  struct Case {
    Algorithm algo;
    GraphSpec graph;
  };
  const GraphSpec k4 = GraphSpec::of(Family::complete, {4});
  const GraphSpec k5 = GraphSpec::of(Family::complete_self_loops, {5});
  const GraphSpec c6 = GraphSpec::of(Family::cycle, {6});
  const GraphSpec q3 = GraphSpec::of(Family::hypercube, {3});
  std::uint64_t seed = 100;
  for (const auto& cs : std::vector<Case>{{Algorithm::wilson, k4},        {Algorithm::aldous_broder, k4},
                                          {Algorithm::urn_tree, k4},      {Algorithm::hybrid, k5},
                                          {Algorithm::edge_wilson, c6},   {Algorithm::aldous_broder, c6},
                                          {Algorithm::wilson, q3},        {Algorithm::aldous_broder, q3},
                                          {Algorithm::wilson, g0()}}) {
    const auto rep = run_uniformity_experiment(make(cs.algo, cs.graph, 100000, seed++), UniformityTarget::all());
    CHECK_MESSAGE(rep.chi.p_value > 0.001, algorithm_name(cs.algo), " on ", cs.graph.label());
  }
}

TEST_CASE("seeded-tree bias target") {
  auto cfg = make(Algorithm::seeded_tree, GraphSpec::of(Family::complete, {5}), 200000, 11);
  const Tree star({0, 1, 2, 3}, {make_edge(0, 1), make_edge(0, 2), make_edge(0, 3)});
  cfg.initial = star;
  const auto rep = run_uniformity_experiment(cfg, UniformityTarget::seeded(star));
  std::size_t zero = 0;
  for (double p : rep.expected) zero += p == 0.0;
  CHECK(zero == 60);
  CHECK(rep.tv < 0.015);
  CHECK(rep.chi.p_value > 0.001);
}

TEST_CASE("first-branch probabilities on the counterexample graph") {
  const Tree event = path({0, 1, 2});
  const auto ab = first_branch_experiment(make(Algorithm::aldous_broder, g0(), 1000000, 12), event);
  const auto wi = first_branch_experiment(make(Algorithm::wilson, g0(), 1000000, 13), event);
  CHECK(std::abs(ab.value - 1.0 / 12.0) < 0.003);
  CHECK(std::abs(wi.value - 1.0 / 9.0) < 0.003);
  CHECK(ab.se > 0.0);
  const auto c5 = first_branch_experiment(make(Algorithm::aldous_broder, GraphSpec::of(Family::cycle, {5}), 1000000, 14),
                                          path({1, 2, 3}));
  CHECK(std::abs(c5.value - 0.05) < 0.002);
}

TEST_CASE("branch-length experiment") {
  const auto rep = branch_length_experiment(make(Algorithm::wilson, GraphSpec::of(Family::complete_self_loops, {10}),
                                                 200000, 15));
  CHECK(rep.first_tv(1) < 0.01);
  for (const auto& [k, hist] : rep.by_prior) CHECK(rep.tv_at(k) < 0.03);
}

TEST_CASE("transient experiment") {
  const auto rep = transient_experiment(GraphSpec::of(Family::complete_self_loops, {6}), 1, 200000, 16);
  CHECK(rep.samples == 200000);
  CHECK(rep.tv < 0.02);
}

TEST_CASE("hypercube experiment at d=3") {
  const auto rep = hypercube_conjecture_experiment(3, 20000, 17);
  CHECK(rep.ratio > 0.5);
  CHECK(rep.ratio < 1.0);
  CHECK(rep.edge_wilson.first_steps.mean < rep.wilson.first_steps.mean);
}

TEST_CASE("csv layout") {
  auto cfg = make(Algorithm::wilson, GraphSpec::of(Family::cycle, {4}), 3, 99);
  cfg.record_curve = true;
  const auto st = run_steps_experiment(cfg);
  std::ostringstream out;
  write_steps_csv(out, cfg, 4, st);
  const std::string s = out.str();
  CHECK(s.rfind("# seed=99 config=" + hex_hash(cfg.hash()) + "\nalgorithm,graph,n,replica,steps\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 5);
  std::ostringstream curve;
  write_curve_csv(curve, cfg, st);
  CHECK(curve.str().find("algorithm,k,mean_steps\nwilson,1,") != std::string::npos);
  Report rep;
  rep.add("count", std::uint64_t{3});
  rep.add("p", 0.5);
  std::ostringstream r;
  rep.write(r, 1, 2);
  CHECK(r.str() == "# seed=1 config=0000000000000002\nmetric,value\ncount,3\np,0.500000\n");
}

TEST_CASE("runner rejects invalid configurations") {
  CHECK_THROWS(ReplicaRunner(make(Algorithm::urn_tree, GraphSpec::of(Family::cycle, {5}), 1, 0)));
  auto cfg = make(Algorithm::wilson, GraphSpec::of(Family::cycle, {5}), 1, 0);
  cfg.root = 9;
  CHECK_THROWS(ReplicaRunner(cfg));
  cfg.root.reset();
  cfg.initial = path({0, 2});
  CHECK_THROWS(ReplicaRunner(cfg));
}
