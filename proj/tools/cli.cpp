#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ustlab/branch_chain.hpp"
#include "ustlab/csv.hpp"
#include "ustlab/harness.hpp"
#include "ustlab/oracles.hpp"
#include "ustlab/suites.hpp"

namespace ustlab {

namespace fs = std::filesystem;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  return out;
}

struct GraphFlags {
  std::string family;
  std::string edge_list;
  long n = 0, d = 0, width = 0, height = 0;
  bool self_loops = false;

  void add(CLI::App* app) {
    auto* g = app->add_option("--graph", family, "Graph family: complete, cycle, hypercube, grid, complete-bipartite");
    auto* e = app->add_option("--edge-list", edge_list, "Edge-list file");
    g->excludes(e);
    app->add_option("--n", n, "Vertex count (complete, cycle, complete-bipartite)");
    app->add_option("--d", d, "Hypercube dimension");
    app->add_option("--width", width, "Grid width");
    app->add_option("--height", height, "Grid height");
    app->add_flag("--self-loops", self_loops, "Add a unit self-loop at every vertex of the complete graph");
  }

  GraphSpec resolve() const {
    if (family.empty() == edge_list.empty()) throw InputError("exactly one of --graph or --edge-list is required");
    if (!edge_list.empty()) {
      if (self_loops) throw InputError("--self-loops applies to --graph complete only");
      return GraphSpec::from_text(read_file(edge_list), edge_list);
    }
    Family f = parse_family(family);
    if (self_loops) {
      if (f != Family::complete && f != Family::complete_self_loops)
        throw InputError("--self-loops applies to --graph complete only");
      f = Family::complete_self_loops;
    }
    auto need = [](long v, const char* flag) {
      if (v <= 0) throw InputError(std::string(flag) + " is required and must be positive for this graph family");
      return v;
    };
    switch (f) {
      case Family::hypercube:
        return GraphSpec::of(f, {need(d, "--d")});
      case Family::grid:
        return GraphSpec::of(f, {need(width, "--width"), need(height, "--height")});
      default:
        return GraphSpec::of(f, {need(n, "--n")});
    }
  }
};

struct AlgoFlags {
  std::string algo = "wilson";
  std::size_t branches = 1;
  std::string seed_tree;
  std::optional<long> root;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--algo", algo, "aldous-broder, wilson, urn-tree, hybrid, edge-wilson, seeded-tree");
    app->add_option("--branches", branches, "Hybrid switch point i");
    app->add_option("--seed-tree", seed_tree, "Tree file: Wilson initial condition or Seeded-Tree seed");
    app->add_option("--root", root, "Fixed start vertex");
    app->add_option("--seed", seed, "Master seed");
  }

  ExperimentConfig config(const GraphSpec& g) const {
    ExperimentConfig cfg;
    cfg.algorithm = parse_algorithm(algo);
    cfg.graph = g;
    cfg.seed = seed;
    cfg.branches = branches;
    if (root) {
      if (*root < 0) throw InputError("--root must be nonnegative");
      cfg.root = static_cast<Vertex>(*root);
    }
    if (!seed_tree.empty()) {
      if (cfg.algorithm != Algorithm::wilson && cfg.algorithm != Algorithm::seeded_tree)
        throw InputError("--seed-tree applies to wilson and seeded-tree only");
      cfg.initial = parse_tree(read_file(seed_tree));
    }
    if (cfg.algorithm == Algorithm::seeded_tree && !cfg.initial) throw InputError("seeded-tree needs --seed-tree");
    return cfg;
  }
};

int generate(const GraphFlags& gf, const AlgoFlags& af, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  const auto cfg = af.config(gf.resolve());
  const ReplicaRunner runner(cfg);
  auto res = runner.run(0);
  if (!res.warning.empty()) err << "ustlab: warning: " << res.warning << '\n';
  if (!is_spanning_tree(runner.graph(), res.tree)) throw std::logic_error("generator returned a non-spanning tree");
  if (!res.tree.root()) res.tree.set_root(res.trace.vertices.empty() ? Vertex{0} : res.trace.vertices.front());
  const std::string text = to_edge_list(res.tree);
  if (out_path.empty()) {
    out << text;
  } else {
    auto f = open_out(out_path);
    f << text;
  }
  return 0;
}

int bench(const GraphFlags& gf, const AlgoFlags& af, std::size_t replicas, const std::string& out_dir,
          std::ostream& out) {
  auto cfg = af.config(gf.resolve());
  if (cfg.algorithm == Algorithm::seeded_tree) throw InputError("bench counts walk steps; seeded-tree has none");
  cfg.replicas = replicas;
  cfg.record_curve = true;
  const auto st = run_steps_experiment(cfg);
  const std::size_t n = cfg.graph.build().vertex_count();
  {
    auto f = open_out(fs::path(out_dir) / "steps.csv");
    write_steps_csv(f, cfg, n, st);
  }
  {
    auto f = open_out(fs::path(out_dir) / "curve.csv");
    write_curve_csv(f, cfg, st);
  }
  Report rep;
  rep.add("replicas", static_cast<std::uint64_t>(replicas));
  rep.add("mean_steps", st.summary.mean);
  rep.add("sd_steps", st.summary.sd);
  rep.add("se_steps", st.summary.se);
  rep.add("min_steps", st.summary.min);
  rep.add("max_steps", st.summary.max);
  rep.add("mean_first_branch_steps", st.first_steps.mean);
  rep.add("mean_first_branch_length", st.first_length.mean);
  {
    auto f = open_out(fs::path(out_dir) / "report.csv");
    rep.write(f, cfg.seed, cfg.hash());
  }
  rep.write(out, cfg.seed, cfg.hash());
  return 0;
}

int verify(const std::string& suite, std::uint64_t seed, const std::string& out_dir, std::ostream& out) {
  SuiteOptions opts;
  opts.seed = seed;
  if (!out_dir.empty()) opts.out_dir = out_dir;
  bool ok = true;
  for (const auto& r : run_suite(suite, opts)) {
    out << format_result(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 2;
}

int dist(std::size_t n, std::size_t k, const std::string& law, const std::string& out_dir, std::ostream& out) {
  if (n < 2 || k < 1 || k >= n) throw InputError("dist needs n >= 2 and 1 <= k < n");
  const Pmf pmf = branch_pmf(n, k);
  const auto lumped = build_chain(n, k, ChainVariant::lumped);
  const auto absorbing = build_chain(n, k, ChainVariant::absorbing);
  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    auto a = open_out(dir / "branch_pmf.csv");
    write_pmf_csv(a, pmf);
    auto b = open_out(dir / "stationary.csv");
    write_pmf_csv(b, stationary(lumped));
    auto c = open_out(dir / "absorption_profile.csv");
    write_pmf_csv(c, absorption_profile(absorbing));
    auto d = open_out(dir / "chain_lumped.csv");
    write_chain_csv(d, lumped);
    auto e = open_out(dir / "chain_absorbing.csv");
    write_chain_csv(e, absorbing);
  }
  if (law == "branch") write_pmf_csv(out, pmf);
  else if (law == "stationary") write_pmf_csv(out, stationary(lumped));
  else if (law == "absorption") write_pmf_csv(out, absorption_profile(absorbing));
  else if (law == "chain-lumped") write_chain_csv(out, lumped);
  else if (law == "chain-absorbing") write_chain_csv(out, absorbing);
  else throw InputError("unknown --law '" + law + "'");
  return 0;
}

int oracle(const GraphFlags& gf, bool hitting, bool transitive, const std::string& enumerate_path, std::ostream& out) {
  const GraphSpec spec = gf.resolve();
  const Graph g = spec.build();
  Report rep;
  rep.add("n", static_cast<std::uint64_t>(g.vertex_count()));
  rep.add("edges", static_cast<std::uint64_t>(g.edge_count()));
  bool integral = true;
  for (const auto& e : g.weighted_edges()) integral = integral && e.weight == std::floor(e.weight);
  if (integral) rep.add("spanning_trees", spanning_tree_count(g).str());
  else rep.add("spanning_trees", weighted_spanning_tree_count(g));
  if (!enumerate_path.empty()) {
    const auto index = enumerate_spanning_trees(g);
    auto f = open_out(enumerate_path);
    index.write(f);
    rep.add("enumerated", static_cast<std::uint64_t>(index.size()));
  }
  if (hitting) {
    const auto h = hitting_stats(g);
    const auto r = speedup_residual(h);
    rep.add("kemeny", h.kemeny);
    rep.add("omega", h.omega);
    rep.add("phi_zero", h.phi_zero);
    rep.add("phi", h.phi);
    rep.add("omega_minus_phi", r.omega_minus_phi);
    rep.add("general_identity_rhs", r.general_rhs);
    rep.add("general_residual", sci(r.general));
    if (r.transitive) rep.add("transitive_residual", sci(*r.transitive));
  }
  if (transitive) {
    const auto t = transitive_hitting(g);
    rep.add("transitive_kemeny", t.kemeny);
    rep.add("transitive_omega", t.omega);
    rep.add("transitive_phi_zero", t.phi_zero);
    rep.add("transitive_phi", t.phi);
    rep.add("adjacent_hitting", t.adjacent_hitting);
    rep.add("first_hit_mass", t.first_hit_mass);
  }
  rep.write(out, 0, fnv1a(spec.label()));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-walk uniform spanning tree generators and their branch structure", "ustlab"};
  app.require_subcommand(1);

  GraphFlags gen_graph, bench_graph, oracle_graph;
  AlgoFlags gen_algo, bench_algo;
  std::string gen_out, bench_out = ".", verify_out, dist_out, enumerate_path;
  std::string suite = "all", law = "branch";
  std::uint64_t verify_seed = 1;
  std::size_t replicas = 1000, dist_n = 0, dist_k = 0;
  bool hitting = false, transitive = false;

  auto* gen = app.add_subcommand("generate", "Generate one spanning tree and write its edge list");
  gen_graph.add(gen);
  gen_algo.add(gen);
  gen->add_option("--out", gen_out, "Output file (default: standard output)");

  auto* bch = app.add_subcommand("bench", "Run replicas and write steps.csv, curve.csv and report.csv");
  bench_graph.add(bch);
  bench_algo.add(bch);
  bch->add_option("--replicas", replicas, "Replica count")->check(CLI::PositiveNumber);
  bch->add_option("--out", bench_out, "Output directory");

  auto* ver = app.add_subcommand("verify", "Run an acceptance suite; exit 0 iff every check passes");
  ver->add_option("--suite", suite, "Suite name or 'all'");
  ver->add_option("--seed", verify_seed, "Master seed");
  ver->add_option("--out", verify_out, "Directory for suite CSVs");

  auto* dst = app.add_subcommand("dist", "Branch-length law and branch chains at (n, k) as CSV");
  dst->add_option("--n", dist_n, "Vertex count")->required();
  dst->add_option("--k", dist_k, "Prior tree size")->required();
  dst->add_option("--law", law, "branch, stationary, absorption, chain-lumped or chain-absorbing");
  dst->add_option("--out", dist_out, "Directory for all five CSVs");

  auto* orc = app.add_subcommand("oracle", "Exact tree counts and hitting-time quantities");
  oracle_graph.add(orc);
  orc->add_flag("--hitting", hitting, "Full hitting-time matrices, omega, phi and speed-up residuals");
  orc->add_flag("--transitive", transitive, "Single-target solves for vertex- and edge-transitive graphs");
  orc->add_option("--enumerate", enumerate_path, "Write every spanning tree to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == gen) return generate(gen_graph, gen_algo, gen_out, out, err);
    if (active == bch) return bench(bench_graph, bench_algo, replicas, bench_out, out);
    if (active == ver) return verify(suite, verify_seed, verify_out, out);
    if (active == dst) return dist(dist_n, dist_k, law, dist_out, out);
    return oracle(oracle_graph, hitting, transitive, enumerate_path, out);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const std::length_error*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "ustlab: error: " << e.what() << "\n\n" << active->help();
      return 1;
    }
    err << "ustlab: internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "ustlab: error: " << e.what() << "\n\n" << active->help();
    return 1;
  }
}

}  // namespace ustlab
