#include "ustlab/harness.hpp"

#include "ustlab/branch_chain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace ustlab {

GraphSpec GraphSpec::of(Family f, std::vector<long> params) {
  GraphSpec s;
  s.family = f;
  s.params = std::move(params);
  return s;
}

GraphSpec GraphSpec::from_text(std::string text, std::string source) {
  GraphSpec s;
  s.edge_list = std::move(text);
  s.source = std::move(source);
  return s;
}

std::string GraphSpec::label() const {
  if (!family) {
    std::ostringstream out;
    out << "edge_list:" << std::hex << fnv1a(edge_list);
    return out.str();
  }
  std::string s(family_name(*family));
  s += '(';
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ')';
}

Graph GraphSpec::build() const {
  if (family) return make_family(*family, params);
  return from_edge_list(edge_list);
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  out << "algorithm=" << algorithm_name(algorithm) << ";graph=" << graph.label() << ";replicas=" << replicas
      << ";seed=" << seed << ";branches=" << branches << ";root=";
  if (root) out << *root;
  else out << "uniform";
  out << ";initial=";
  if (initial) {
    for (Vertex v : initial->vertices()) out << v << ',';
    out << '|';
    for (const auto& e : initial->edges()) out << e.u << '-' << e.v << ',';
  }
  out << ";curve=" << record_curve << ";branch_lengths=" << record_branches << ";first_branch=" << record_first_branch;
  return out.str();
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a(canonical()); }

void ExperimentConfig::validate() const {
  if (replicas < 1) throw std::invalid_argument("replica count must be at least 1");
  if (algorithm == Algorithm::hybrid && branches < 1) throw std::invalid_argument("hybrid needs --branches >= 1");
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("USTLAB_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) hw = std::min<std::size_t>(hw, cap);
  }
  return hw;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(w, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ReplicaRunner::ReplicaRunner(const ExperimentConfig& cfg) : cfg_(cfg), graph_(cfg.graph.build()) {
  cfg_.validate();
  if (cfg_.root && !graph_.contains(*cfg_.root)) throw GraphError("root is not a vertex of the graph");
  if (cfg_.initial && !cfg_.initial->empty()) require_subtree(graph_, *cfg_.initial);
  if ((cfg_.algorithm == Algorithm::urn_tree || cfg_.algorithm == Algorithm::seeded_tree) && !graph_.is_complete())
    throw GraphError(std::string(algorithm_name(cfg_.algorithm)) + " runs on complete graphs only");
}

GenerationResult ReplicaRunner::run(std::uint64_t replica) const {
  RngStream rng(cfg_.seed, replica);
  switch (cfg_.algorithm) {
    case Algorithm::aldous_broder:
      return aldous_broder(graph_, cfg_.root, rng);
    case Algorithm::wilson:
      if (cfg_.initial && !cfg_.initial->empty()) return wilson(graph_, *cfg_.initial, rng);
      if (cfg_.root) return wilson(graph_, *cfg_.root, rng);
      return wilson(graph_, Tree{}, rng);
    case Algorithm::urn_tree: {
      const Vertex r = cfg_.root ? *cfg_.root : static_cast<Vertex>(rng.uniform_index(graph_.vertex_count()));
      return urn_tree(graph_.vertex_count(), r, rng);
    }
    case Algorithm::hybrid:
      return hybrid(graph_, cfg_.branches, rng, cfg_.root);
    case Algorithm::edge_wilson:
      return edge_wilson(graph_, rng);
    case Algorithm::seeded_tree: {
      GenerationResult out;
      out.tree = seeded_tree(graph_, cfg_.initial.value_or(Tree{}), rng);
      return out;
    }
  }
  throw std::logic_error("unknown algorithm");
}

namespace {

Tree first_branch_tree(const ExperimentConfig& cfg, const GenerationResult& res) {
  const bool from_root = cfg.algorithm == Algorithm::aldous_broder || cfg.algorithm == Algorithm::hybrid ||
                         cfg.algorithm == Algorithm::urn_tree;
  const Tree prior = from_root ? Tree::single_vertex(res.trace.vertices.front()) : res.initial;
  return partial_tree(prior, res.branches, 1);
}

std::vector<std::uint64_t> add(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

StepStats run_steps_experiment(const ExperimentConfig& cfg) {
  ReplicaRunner runner(cfg);
  const std::size_t n = runner.graph().vertex_count();
  const std::size_t workers = worker_count(cfg.threads);
  StepStats st;
  st.steps.assign(cfg.replicas, 0);
  st.first_branch_steps.assign(cfg.replicas, 0);
  st.first_branch_length.assign(cfg.replicas, 0);
  std::vector<std::vector<std::uint64_t>> curve(workers, std::vector<std::uint64_t>(cfg.record_curve ? n - 1 : 0, 0));
  parallel_for(cfg.replicas, workers, [&](std::size_t w, std::size_t k) {
    const auto res = runner.run(k);
    st.steps[k] = res.rw_steps;
    if (!res.branches.empty()) {
      st.first_branch_steps[k] = std::min<std::uint64_t>(res.branches.front().t_stop, res.trace.steps);
      st.first_branch_length[k] = res.branches.front().length();
    }
    if (cfg.record_curve) {
      if (res.growth.size() != n - 1) throw std::logic_error("growth curve has the wrong length");
      for (std::size_t j = 0; j + 1 < n; ++j) curve[w][j] += res.growth[j];
    }
  });
  st.summary = summarize(st.steps);
  st.first_steps = summarize(st.first_branch_steps);
  st.first_length = summarize(st.first_branch_length);
  if (cfg.record_curve) {
    std::vector<std::uint64_t> total;
    for (const auto& c : curve) total = add(std::move(total), c);
    st.curve.resize(total.size());
    for (std::size_t j = 0; j < total.size(); ++j)
      st.curve[j] = static_cast<double>(total[j]) / static_cast<double>(cfg.replicas);
  }
  return st;
}

std::vector<double> target_law(const Graph& g, const TreeIndex& index, const UniformityTarget& target) {
  std::vector<double> w(index.size(), 0.0);
  for (std::size_t s = 0; s < index.size(); ++s) {
    const Tree& t = index.tree(s);
    switch (target.kind) {
      case TargetKind::uniform_all:
        w[s] = 1.0;
        break;
      case TargetKind::uniform_containing:
        w[s] = t.contains(target.tree.value()) ? 1.0 : 0.0;
        break;
      case TargetKind::seeded_bias:
        w[s] = static_cast<double>(count_isomorphic_subtrees(t, target.tree.value_or(Tree{})));
        break;
    }
  }
  if (target.kind == TargetKind::uniform_containing) require_subtree(g, target.tree.value());
  double total = 0.0;
  for (double x : w) total += x;
  if (total <= 0.0) throw std::invalid_argument("target law has no support");
  for (double& x : w) x /= total;
  return w;
}

UniformityReport run_uniformity_experiment(const ExperimentConfig& cfg, const UniformityTarget& target) {
  ReplicaRunner runner(cfg);
  UniformityReport rep;
  rep.index = enumerate_spanning_trees(runner.graph());
  rep.expected = target_law(runner.graph(), rep.index, target);
  const std::size_t workers = worker_count(cfg.threads);
  std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(rep.index.size(), 0));
  parallel_for(cfg.replicas, workers, [&](std::size_t w, std::size_t k) {
    const auto res = runner.run(k);
    const auto id = rep.index.find(res.tree);
    if (!id) throw std::logic_error("generator returned a tree outside the spanning-tree set");
    ++hist[w][*id];
  });
  rep.observed.assign(rep.index.size(), 0);
  for (const auto& h : hist) rep.observed = add(std::move(rep.observed), h);
  rep.samples = cfg.replicas;
  rep.chi = chi_square(rep.observed, rep.expected);
  rep.tv = tv_distance(rep.observed, rep.expected);
  return rep;
}

Estimate first_branch_experiment(const ExperimentConfig& cfg, const Tree& event) {
  ReplicaRunner runner(cfg);
  require_subtree(runner.graph(), event);
  const std::size_t workers = worker_count(cfg.threads);
  std::vector<std::uint64_t> hits(workers, 0);
  parallel_for(cfg.replicas, workers, [&](std::size_t w, std::size_t k) {
    const auto res = runner.run(k);
    if (first_branch_tree(cfg, res) == event) ++hits[w];
  });
  Estimate e;
  for (auto h : hits) e.hits += h;
  e.samples = cfg.replicas;
  e.value = static_cast<double>(e.hits) / static_cast<double>(e.samples);
  e.se = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(e.samples));
  return e;
}

namespace {

double hist_tv(const std::vector<std::uint64_t>& hist, std::size_t n, std::size_t k) {
  const Pmf pmf = branch_pmf(n, k);
  std::vector<std::uint64_t> h(pmf.size(), 0);
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (i >= h.size() && hist[i] > 0) throw std::logic_error("branch longer than n - k");
    if (i < h.size()) h[i] = hist[i];
  }
  return tv_distance(h, pmf.p);
}

}  // namespace

double BranchLengthReport::first_tv(std::size_t k) const { return hist_tv(first, n, k); }

double BranchLengthReport::tv_at(std::size_t k) const { return hist_tv(by_prior.at(k), n, k); }

BranchLengthReport branch_length_experiment(const ExperimentConfig& cfg) {
  ReplicaRunner runner(cfg);
  const std::size_t n = runner.graph().vertex_count();
  const std::size_t workers = worker_count(cfg.threads);
  std::vector<BranchLengthReport> local(workers);
  parallel_for(cfg.replicas, workers, [&](std::size_t w, std::size_t k) {
    const auto res = runner.run(k);
    auto& rep = local[w];
    if (rep.first.empty()) rep.first.assign(n, 0);
    if (!res.branches.empty()) ++rep.first[res.branches.front().length() - 1];
    for (const auto& b : res.branches) {
      auto& h = rep.by_prior[b.prior_size];
      if (h.empty()) h.assign(n, 0);
      ++h[b.length() - 1];
    }
  });
  BranchLengthReport out;
  out.n = n;
  out.first.assign(n, 0);
  for (const auto& rep : local) {
    out.first = add(std::move(out.first), rep.first);
    for (const auto& [k, h] : rep.by_prior) out.by_prior[k] = add(std::move(out.by_prior[k]), h);
  }
  return out;
}

TransientReport transient_experiment(const GraphSpec& graph, std::size_t i, std::size_t replicas, std::uint64_t seed,
                                     std::size_t threads) {
  if (i < 1) throw std::invalid_argument("transient_experiment needs i >= 1");
  ExperimentConfig ab;
  ab.algorithm = Algorithm::aldous_broder;
  ab.graph = graph;
  ab.replicas = replicas;
  ab.root = 0;
  ab.threads = threads;
  ab.seed = derive_seed(seed, "transient-aldous-broder");
  ExperimentConfig wi = ab;
  wi.algorithm = Algorithm::wilson;
  wi.seed = derive_seed(seed, "transient-wilson");

  using Key = std::vector<int>;
  auto histogram = [&](const ExperimentConfig& cfg) {
    ReplicaRunner runner(cfg);
    const std::size_t workers = worker_count(threads);
    std::vector<std::map<Key, std::uint64_t>> local(workers);
    parallel_for(replicas, workers, [&](std::size_t w, std::size_t k) {
      const auto res = runner.run(k);
      const Tree part = partial_tree(Tree::single_vertex(0), res.branches, i);
      Key key;
      for (std::size_t b = 0; b < i && b < res.branches.size(); ++b) key.push_back(static_cast<int>(res.branches[b].length()));
      key.push_back(-1);
      for (Vertex v : part.vertices()) key.push_back(v);
      ++local[w][key];
    });
    std::map<Key, std::uint64_t> total;
    for (const auto& m : local)
      for (const auto& [key, c] : m) total[key] += c;
    return total;
  };
  const auto ha = histogram(ab);
  const auto hw = histogram(wi);
  std::map<Key, std::pair<std::uint64_t, std::uint64_t>> joint;
  for (const auto& [key, c] : ha) joint[key].first = c;
  for (const auto& [key, c] : hw) joint[key].second = c;
  TransientReport rep;
  rep.cells = joint.size();
  rep.samples = replicas;
  const auto R = static_cast<double>(replicas);
  for (const auto& [key, c] : joint) rep.tv += std::abs(static_cast<double>(c.first) - static_cast<double>(c.second)) / R;
  rep.tv /= 2.0;
  return rep;
}

HypercubeReport hypercube_conjecture_experiment(std::size_t d, std::size_t replicas, std::uint64_t seed,
                                                std::size_t threads) {
  HypercubeReport rep;
  rep.d = d;
  ExperimentConfig cfg;
  cfg.graph = GraphSpec::of(Family::hypercube, {static_cast<long>(d)});
  cfg.replicas = replicas;
  cfg.record_curve = true;
  cfg.threads = threads;
  cfg.algorithm = Algorithm::edge_wilson;
  cfg.seed = derive_seed(seed, "hypercube-edge-wilson");
  rep.edge_wilson = run_steps_experiment(cfg);
  cfg.algorithm = Algorithm::wilson;
  cfg.seed = derive_seed(seed, "hypercube-wilson");
  rep.wilson = run_steps_experiment(cfg);
  rep.ratio = rep.edge_wilson.summary.mean / rep.wilson.summary.mean;
  return rep;
}

}  // namespace ustlab
