#include "ustlab/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <unistd.h>

#include "ustlab/branch_chain.hpp"
#include "ustlab/csv.hpp"
#include "ustlab/harness.hpp"

namespace ustlab {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMillion = 1'000'000;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Ctx {
  const SuiteOptions& opts;
  std::string suite;
  CriterionResult result;
  Report report;

  Ctx(const SuiteOptions& o, std::string id, std::string name) : opts(o), suite(name) {
    result.id = std::move(id);
    result.name = std::move(name);
    result.passed = true;
  }

  std::uint64_t seed(std::string_view label) const { return derive_seed(opts.seed, suite + "/" + std::string(label)); }

  ExperimentConfig config(Algorithm a, GraphSpec g, std::size_t replicas, std::string_view label) const {
    ExperimentConfig cfg;
    cfg.algorithm = a;
    cfg.graph = std::move(g);
    cfg.replicas = replicas;
    cfg.seed = seed(label);
    cfg.threads = opts.threads;
    return cfg;
  }

  // Records one check; the suite passes iff every check does.
  void check(bool ok, const std::string& what) {
    result.passed = result.passed && ok;
    result.details.push_back((ok ? "ok   " : "FAIL ") + what);
  }

  void note(const std::string& what) { result.details.push_back("     " + what); }

  template <class Fn>
  void write(const std::string& file, Fn&& fn) const {
    if (!opts.out_dir) return;
    const fs::path dir = *opts.out_dir / suite;
    fs::create_directories(dir);
    std::ofstream out(dir / file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / file).string());
    fn(out);
  }

  CriterionResult finish() {
    write("report.csv", [&](std::ostream& out) { report.write(out, opts.seed, fnv1a(suite)); });
    return std::move(result);
  }
};

bool within_rel(double x, double target, double rel) { return std::abs(x - target) <= rel * std::abs(target); }

std::string vs(double x, double target) { return fixed(x, 4) + " vs " + fixed(target, 4); }

GraphSpec complete(long n, bool loops) {
  return GraphSpec::of(loops ? Family::complete_self_loops : Family::complete, {n});
}

GraphSpec g0_spec() { return GraphSpec::from_text("0 1\n1 2\n1 3\n2 3\n", "G0"); }

GraphSpec square_diagonal_spec() { return GraphSpec::from_text("0 1\n0 2\n1 2\n1 3\n2 3\n", "square-plus-diagonal"); }

Tree path_tree(std::vector<Vertex> vs) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) es.push_back(make_edge(vs[i], vs[i + 1]));
  return Tree(std::move(vs), std::move(es));
}

CriterionResult branch_law(const SuiteOptions& opts) {
  Ctx c(opts, "AC1", "branch-law");
  Timer timer;
  double ds = 0.0, da = 0.0;
  std::uint64_t cases = 0;
  for (std::size_t n = 2; n <= 50; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const Pmf pmf = branch_pmf(n, k);
      ds = std::max(ds, max_abs_diff(pmf, stationary(build_chain(n, k, ChainVariant::lumped))));
      da = std::max(da, max_abs_diff(pmf, absorption_profile(build_chain(n, k, ChainVariant::absorbing))));
      ++cases;
    }
  const double secs = timer.seconds();
  c.report.add("cases", cases);
  c.report.add("max_diff_stationary", sci(ds));
  c.report.add("max_diff_absorption", sci(da));
  c.write("branch_pmf_12_1.csv", [](std::ostream& out) { write_pmf_csv(out, branch_pmf(12, 1)); });
  c.check(ds < 1e-10, "max |pmf - stationary(lumped)| = " + sci(ds) + " over " + std::to_string(cases) + " (n,k)");
  c.check(da < 1e-10, "max |pmf - absorption_profile| = " + sci(da));
  c.check(secs < 10.0, "runtime " + fixed(secs, 2) + " s < 10 s");
  return c.finish();
}

CriterionResult branch_empirical(const SuiteOptions& opts) {
  Ctx c(opts, "AC2", "branch-empirical");
  Timer timer;
  struct Case {
    const char* label;
    Algorithm algo;
    bool loops;
  };
  for (const Case& cs : {Case{"wilson-k12-loops", Algorithm::wilson, true},
                         Case{"aldous-broder-k12-loops", Algorithm::aldous_broder, true},
                         Case{"wilson-k12", Algorithm::wilson, false}}) {
    const auto cfg = c.config(cs.algo, complete(12, cs.loops), kMillion, cs.label);
    const auto rep = branch_length_experiment(cfg);
    const double tv = rep.first_tv(1);
    c.report.add(std::string(cs.label) + "_first_branch_tv", tv);
    c.check(tv < 0.02, std::string(cs.label) + ": first-branch length TV " + fixed(tv) + " < 0.02");
    std::string later;
    for (const auto& [k, hist] : rep.by_prior) {
      if (k == 1) continue;
      const double t = rep.tv_at(k);
      c.report.add(std::string(cs.label) + "_tv_k" + std::to_string(k), t);
      later += " k=" + std::to_string(k) + ":" + fixed(t, 4);
    }
    c.note(std::string(cs.label) + " later branches" + later);
    c.write(std::string(cs.label) + "-first-branch.csv", [&](std::ostream& out) {
      write_preamble(out, cfg.seed, cfg.hash());
      out << "h,observed,expected\n";
      const Pmf pmf = branch_pmf(12, 1);
      for (std::size_t h = 1; h <= pmf.size(); ++h)
        out << h << ',' << rep.first[h - 1] << ',' << fixed(pmf(h) * static_cast<double>(cfg.replicas)) << '\n';
    });
  }
  const double secs = timer.seconds();
  c.check(secs < 120.0, "runtime " + fixed(secs, 1) + " s < 120 s");
  return c.finish();
}

CriterionResult transient(const SuiteOptions& opts) {
  Ctx c(opts, "AC3", "transient");
  for (std::size_t i : {1, 2}) {
    const auto rep = transient_experiment(complete(8, true), i, kMillion, c.seed("i" + std::to_string(i)), opts.threads);
    c.report.add("tv_i" + std::to_string(i), rep.tv);
    c.report.add("cells_i" + std::to_string(i), static_cast<std::uint64_t>(rep.cells));
    c.check(rep.tv < 0.02, "K8 with loops, i=" + std::to_string(i) + ": TV " + fixed(rep.tv) + " < 0.02 over " +
                               std::to_string(rep.cells) + " cells");
  }
  return c.finish();
}

CriterionResult uniformity(const SuiteOptions& opts) {
  Ctx c(opts, "AC4", "uniformity");
  struct Case {
    std::string label;
    Algorithm algo;
    GraphSpec graph;
  };
  const GraphSpec k5 = complete(5, true);
  const GraphSpec c6 = GraphSpec::of(Family::cycle, {6});
  const std::vector<Case> cases = {
      {"wilson-k5", Algorithm::wilson, k5},           {"urn-tree-k5", Algorithm::urn_tree, k5},
      {"hybrid-k5", Algorithm::hybrid, k5},           {"edge-wilson-k5", Algorithm::edge_wilson, k5},
      {"aldous-broder-k5", Algorithm::aldous_broder, k5}, {"wilson-c6", Algorithm::wilson, c6},
      {"hybrid-c6", Algorithm::hybrid, c6},           {"edge-wilson-c6", Algorithm::edge_wilson, c6},
      {"aldous-broder-c6", Algorithm::aldous_broder, c6},
  };
  for (const auto& cs : cases) {
    const auto cfg = c.config(cs.algo, cs.graph, kMillion, cs.label);
    const auto rep = run_uniformity_experiment(cfg, UniformityTarget::all());
    c.report.add(cs.label + "_tv", rep.tv);
    c.report.add(cs.label + "_chi_p", rep.chi.p_value);
    c.write(cs.label + "-uniformity.csv", [&](std::ostream& out) { write_uniformity_csv(out, cfg, rep); });
    c.check(rep.tv < 0.01, cs.label + ": TV " + fixed(rep.tv) + " < 0.01 over " + std::to_string(rep.index.size()) +
                               " trees (chi-square p " + fixed(rep.chi.p_value, 4) + ")");
  }
  c.note("urn-tree is defined on complete graphs only and is not run on C6");
  return c.finish();
}

CriterionResult conditional(const SuiteOptions& opts) {
  Ctx c(opts, "AC5", "conditional");
  struct Case {
    std::string label;
    GraphSpec graph;
    Tree t;
    std::size_t targets;
  };
  const std::vector<Case> cases = {
      {"k4-edge", complete(4, false), path_tree({0, 1}), 8},
      {"c5-path", GraphSpec::of(Family::cycle, {5}), path_tree({0, 1, 2}), 3},
  };
  for (const auto& cs : cases) {
    auto cfg = c.config(Algorithm::wilson, cs.graph, kMillion, cs.label);
    cfg.initial = cs.t;
    const auto rep = run_uniformity_experiment(cfg, UniformityTarget::containing(cs.t));
    c.write(cs.label + "-uniformity.csv", [&](std::ostream& out) { write_uniformity_csv(out, cfg, rep); });
    RngStream rng(c.seed(cs.label + "-collapsed"), 0);
    const auto chk = collapsed_wilson_check(cs.graph.build(), cs.t, kMillion, rng);
    c.report.add(cs.label + "_wilson_tv", rep.tv);
    c.report.add(cs.label + "_collapsed_tv", chk.tv_collapsed);
    c.report.add(cs.label + "_collapsed_plain_tv", chk.tv_plain);
    c.check(chk.targets == cs.targets,
            cs.label + ": " + std::to_string(chk.targets) + " trees contain t (expected " + std::to_string(cs.targets) + ")");
    c.check(rep.tv < 0.01, cs.label + ": wilson(g, t) TV " + fixed(rep.tv) + " < 0.01");
    c.check(chk.tv_collapsed < 0.01, cs.label + ": collapsed weighted Wilson TV " + fixed(chk.tv_collapsed) + " < 0.01");
    c.check(chk.tv_plain < 0.01, cs.label + ": paired plain Wilson TV " + fixed(chk.tv_plain) + " < 0.01");
  }
  return c.finish();
}

CriterionResult counterexample(const SuiteOptions& opts) {
  Ctx c(opts, "AC6", "counterexample");
  const Tree event = path_tree({0, 1, 2});
  const auto ab = first_branch_experiment(c.config(Algorithm::aldous_broder, g0_spec(), kMillion, "g0-aldous-broder"), event);
  const auto wi = first_branch_experiment(c.config(Algorithm::wilson, g0_spec(), kMillion, "g0-wilson"), event);
  c.report.add("g0_aldous_broder_first_branch", ab.value);
  c.report.add("g0_wilson_first_branch", wi.value);
  c.check(std::abs(ab.value - 1.0 / 12.0) <= 0.003, "G0 Aldous-Broder P(first branch = 1-2-3) " + vs(ab.value, 1.0 / 12.0));
  c.check(std::abs(wi.value - 1.0 / 9.0) <= 0.003, "G0 Wilson P(first branch = 1-2-3) " + vs(wi.value, 1.0 / 9.0));

  const auto cfg = c.config(Algorithm::edge_wilson, square_diagonal_spec(), kMillion, "edge-wilson-square-diagonal");
  const auto rep = run_uniformity_experiment(cfg, UniformityTarget::all());
  c.write("edge-wilson-uniformity.csv", [&](std::ostream& out) { write_uniformity_csv(out, cfg, rep); });
  const Edge diagonal = make_edge(1, 2);
  double worst = 0.0;
  std::string masses;
  for (std::size_t s = 0; s < rep.index.size(); ++s) {
    const double mass = rep.index.tree(s).contains_edge(diagonal) ? 0.13 : 0.12;
    const double freq = static_cast<double>(rep.observed[s]) / static_cast<double>(rep.samples);
    worst = std::max(worst, std::abs(freq - mass));
    masses += " S" + std::to_string(s + 1) + "=" + fixed(freq, 4);
    c.report.add("tree_" + std::to_string(s + 1) + "_frequency", freq);
  }
  c.check(rep.index.size() == 8, "square-plus-diagonal has " + std::to_string(rep.index.size()) + " spanning trees");
  c.check(worst <= 0.005, "Edge-Wilson masses within 0.005 of 12/100 and 13/100 (max deviation " + fixed(worst, 4) + ")");
  c.note("frequencies" + masses);
  c.note("uniformity rejected as expected: chi-square p " + sci(rep.chi.p_value) + ", TV " + fixed(rep.tv, 4));
  return c.finish();
}

CriterionResult running_time(const SuiteOptions& opts) {
  Ctx c(opts, "AC7", "running-time");
  Timer timer;
  struct Case {
    std::string label;
    Algorithm algo;
    double target;
  };
  const double n = 1000.0;
  double harmonic = 0.0;
  for (int i = 1; i <= 1000; ++i) harmonic += 1.0 / i;
  const std::vector<Case> cases = {
      {"wilson", Algorithm::wilson, 2.0 * n},
      {"hybrid", Algorithm::hybrid, n + std::sqrt(std::acos(-1.0) * n / 2.0)},
      {"aldous-broder", Algorithm::aldous_broder, n * harmonic},
  };
  std::map<std::string, double> mean;
  for (const auto& cs : cases) {
    auto cfg = c.config(cs.algo, complete(1000, true), 10'000, cs.label);
    cfg.record_curve = true;
    const auto st = run_steps_experiment(cfg);
    mean[cs.label] = st.summary.mean;
    c.report.add(cs.label + "_mean_steps", st.summary.mean);
    c.report.add(cs.label + "_se", st.summary.se);
    c.write(cs.label + "-steps.csv", [&](std::ostream& out) { write_steps_csv(out, cfg, 1000, st); });
    c.write(cs.label + "-curve.csv", [&](std::ostream& out) { write_curve_csv(out, cfg, st); });
    c.check(within_rel(st.summary.mean, cs.target, 0.03), cs.label + " mean steps " + vs(st.summary.mean, cs.target) + " (3%)");
  }
  c.check(mean["hybrid"] < mean["wilson"] && mean["wilson"] < mean["aldous-broder"], "hybrid < wilson < aldous-broder");
  const double secs = timer.seconds();
  c.check(secs < 300.0, "runtime " + fixed(secs, 1) + " s < 300 s");
  return c.finish();
}

CriterionResult hypercube(const SuiteOptions& opts) {
  Ctx c(opts, "AC8", "hypercube");
  const auto rep = hypercube_conjecture_experiment(12, 10'000, c.seed("q12"), opts.threads);
  const auto exact = transitive_hitting(hypercube_graph(12));
  const double w_first = rep.wilson.first_steps.mean;
  const double e_first = rep.edge_wilson.first_steps.mean;
  c.report.add("edge_wilson_mean_steps", rep.edge_wilson.summary.mean);
  c.report.add("wilson_mean_steps", rep.wilson.summary.mean);
  c.report.add("ratio", rep.ratio);
  c.report.add("wilson_first_branch_steps", w_first);
  c.report.add("edge_wilson_first_branch_steps", e_first);
  c.report.add("wilson_first_branch_length", rep.wilson.first_length.mean);
  c.report.add("edge_wilson_first_branch_length", rep.edge_wilson.first_length.mean);
  c.report.add("omega", exact.omega);
  c.report.add("phi", exact.phi);
  c.report.add("adjacent_hitting", exact.adjacent_hitting);
  ExperimentConfig ref;
  ref.graph = GraphSpec::of(Family::hypercube, {12});
  ref.replicas = 10'000;
  ref.algorithm = Algorithm::edge_wilson;
  ref.seed = derive_seed(c.seed("q12"), "hypercube-edge-wilson");
  c.write("edge-wilson-curve.csv", [&](std::ostream& out) { write_curve_csv(out, ref, rep.edge_wilson); });
  ref.algorithm = Algorithm::wilson;
  ref.seed = derive_seed(c.seed("q12"), "hypercube-wilson");
  c.write("wilson-curve.csv", [&](std::ostream& out) { write_curve_csv(out, ref, rep.wilson); });
  c.note("mean steps: edge-wilson " + fixed(rep.edge_wilson.summary.mean, 1) + ", wilson " +
         fixed(rep.wilson.summary.mean, 1));
  c.check(std::abs(rep.ratio - 0.77) <= 0.03, "Edge-Wilson/Wilson step ratio " + vs(rep.ratio, 0.77) + " (0.03)");
  c.check(within_rel(w_first, exact.omega, 0.03), "Wilson first-branch steps " + vs(w_first, exact.omega) + " = omega(Q12) (3%)");
  c.check(within_rel(e_first, exact.phi, 0.03), "Edge-Wilson first-branch steps " + vs(e_first, exact.phi) + " = phi(Q12) (3%)");
  return c.finish();
}

SubtreeLaw uniform_edge_law(const Graph& g) {
  SubtreeLaw law;
  const auto edges = g.edges();
  for (const auto& e : edges) add_mass(law, Tree({e.u, e.v}, {e}), 1.0 / static_cast<double>(edges.size()));
  return law;
}

CriterionResult identities(const SuiteOptions& opts) {
  Ctx c(opts, "AC9", "identities");
  struct Named {
    std::string label;
    Graph g;
    bool transitive;
  };
  const std::vector<Named> graphs = {
      {"K6", complete_graph(6), true},
      {"K3,3", complete_bipartite_graph(3, 3), false},
      {"C8", cycle_graph(8), true},
      {"Q3", hypercube_graph(3), true},
  };
  for (const auto& [label, g, transitive] : graphs) {
    const auto r = speedup_residual(g);
    c.report.add(label + "_general_residual", sci(r.general));
    c.check(r.general < 1e-9, label + ": general speed-up residual " + sci(r.general));
    if (transitive) {
      const bool ok = r.transitive && *r.transitive < 1e-9;
      c.report.add(label + "_transitive_residual", r.transitive ? sci(*r.transitive) : std::string("n/a"));
      c.check(ok, label + ": transitive shortcut residual " + (r.transitive ? sci(*r.transitive) : std::string("n/a")));
    }
  }
  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{
           {"C4", cycle_graph(4)}, {"K4", complete_graph(4)}, {"Q3", hypercube_graph(3)}}) {
    const double r = stage_one_residual(g, uniform_edge_law(g));
    c.report.add(label + "_uniform_edge_stage_one", sci(r));
    c.check(r <= 1e-12, label + ": uniform-edge stage-one residual " + sci(r));
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    const double r = stage_one_residual(cycle_graph(n), cycle_first_branch_law(n));
    c.report.add("C" + std::to_string(n) + "_first_branch_stage_one", sci(r));
    c.check(r <= 1e-12, "C" + std::to_string(n) + ": Aldous-Broder first-branch law stage-one residual " + sci(r));
  }
  for (std::size_t k : {1, 3, 100}) {
    RngStream rng(c.seed("cycle-walk-k" + std::to_string(k)), 0);
    const auto chk = cycle_rw_subtree_check(6, k, kMillion, rng);
    c.report.add("C6_walk_k" + std::to_string(k) + "_residual", sci(chk.residual));
    c.report.add("C6_walk_k" + std::to_string(k) + "_se", sci(chk.standard_error));
    c.check(chk.residual <= 3.0 * chk.standard_error,
            "C6 walk sub-tree k=" + std::to_string(k) + ": residual " + sci(chk.residual) + " <= 3 SE (" +
                sci(3.0 * chk.standard_error) + "), exact law residual " + sci(chk.exact_residual));
  }
  return c.finish();
}

CriterionResult seeded(const SuiteOptions& opts) {
  Ctx c(opts, "AC10", "seeded");
  struct Case {
    std::string label;
    Tree seed;
    UniformityTarget target;
  };
  const Tree edge = path_tree({0, 1});
  const Tree star({0, 1, 2, 3}, {make_edge(0, 1), make_edge(0, 2), make_edge(0, 3)});
  for (const auto& cs : std::vector<Case>{{"single-edge", edge, UniformityTarget::all()},
                                          {"three-star", star, UniformityTarget::seeded(star)}}) {
    auto cfg = c.config(Algorithm::seeded_tree, complete(5, false), kMillion, cs.label);
    cfg.initial = cs.seed;
    const auto rep = run_uniformity_experiment(cfg, cs.target);
    c.report.add(cs.label + "_tv", rep.tv);
    c.report.add(cs.label + "_chi_p", rep.chi.p_value);
    c.write(cs.label + "-uniformity.csv", [&](std::ostream& out) { write_uniformity_csv(out, cfg, rep); });
    c.check(rep.tv < 0.01, "n=5 seed " + cs.label + ": TV " + fixed(rep.tv) + " < 0.01 (chi-square p " +
                               fixed(rep.chi.p_value, 4) + ")");
  }
  return c.finish();
}

using SuiteFn = std::function<CriterionResult(const SuiteOptions&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> r = {
      {"branch-law", branch_law},         {"branch-empirical", branch_empirical},
      {"transient", transient},           {"uniformity", uniformity},
      {"conditional", conditional},       {"counterexample", counterexample},
      {"running-time", running_time},     {"hypercube", hypercube},
      {"identities", identities},         {"seeded", seeded},
  };
  return r;
}

std::map<fs::path, std::string> read_tree(const fs::path& root) {
  std::map<fs::path, std::string> files;
  if (!fs::exists(root)) return files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    files[fs::relative(entry.path(), root)] = std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

fs::path scratch_dir(std::string_view tag) {
  static std::atomic<int> counter{0};
  return fs::temp_directory_path() /
         ("ustlab-" + std::string(tag) + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "branch-law",   "branch-empirical", "transient",  "uniformity", "conditional", "counterexample",
      "running-time", "hypercube",        "identities", "seeded",     "determinism"};
  return names;
}

CriterionResult compare_rerun(const std::vector<std::string>& suites, const SuiteOptions& opts,
                              const fs::path& reference_dir) {
  Ctx c(opts, "AC11", "determinism");
  SuiteOptions rerun = opts;
  rerun.out_dir = scratch_dir("rerun");
  rerun.threads = worker_count(opts.threads) == 1 ? 3 : 1;
  c.note("rerun with " + std::to_string(rerun.threads) + " worker(s) against " +
         std::to_string(worker_count(opts.threads)));
  std::size_t files = 0;
  for (const auto& name : suites) {
    registry().find(name)->second(rerun);
    const auto a = read_tree(reference_dir / name);
    const auto b = read_tree(*rerun.out_dir / name);
    files += a.size();
    bool same = !a.empty() && a.size() == b.size();
    for (const auto& [path, bytes] : a) {
      const auto it = b.find(path);
      if (it == b.end() || it->second != bytes) {
        same = false;
        c.note("differs: " + name + "/" + path.string());
      }
    }
    c.check(same, name + ": " + std::to_string(a.size()) + " CSV file(s) byte-identical on rerun");
  }
  fs::remove_all(*rerun.out_dir);
  c.note(std::to_string(files) + " files compared");
  return std::move(c.result);
}

std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  if (name == "all" || name == "determinism") {
    SuiteOptions ref = opts;
    const bool scratch = !opts.out_dir;
    if (scratch) ref.out_dir = scratch_dir("reference");
    std::vector<std::string> names;
    for (const auto& n : suite_names())
      if (n != "determinism") names.push_back(n);
    for (const auto& n : names) {
      auto r = registry().find(n)->second(ref);
      if (name == "all") out.push_back(std::move(r));
    }
    out.push_back(compare_rerun(names, opts, *ref.out_dir));
    if (scratch) fs::remove_all(*ref.out_dir);
    return out;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  out.push_back(it->second(opts));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::string s = std::string(r.passed ? "PASS " : "FAIL ") + r.id + " " + r.name;
  for (const auto& d : r.details) s += "\n    " + d;
  return s;
}

}  // namespace ustlab
