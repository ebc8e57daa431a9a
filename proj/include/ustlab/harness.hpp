#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ustlab/algorithms.hpp"
#include "ustlab/oracles.hpp"
#include "ustlab/stats.hpp"

namespace ustlab {

struct GraphSpec {
  std::optional<Family> family;
  std::vector<long> params;
  std::string edge_list;  // document text when family is unset
  std::string source;     // file name for edge lists

  static GraphSpec of(Family f, std::vector<long> params);
  static GraphSpec from_text(std::string text, std::string source);
  std::string label() const;
  Graph build() const;
};

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::wilson;
  GraphSpec graph;
  std::size_t replicas = 1;
  std::uint64_t seed = 0;
  std::size_t branches = 1;      // hybrid switch point
  std::optional<Vertex> root;    // fixed start vertex; uniform when unset
  std::optional<Tree> initial;   // Wilson initial condition or Seeded-Tree seed
  bool record_curve = false;
  bool record_branches = false;
  bool record_first_branch = false;
  std::size_t threads = 0;  // 0: USTLAB_THREADS or hardware parallelism; not part of the hash

  std::string canonical() const;
  std::uint64_t hash() const;
  void validate() const;
};

std::size_t worker_count(std::size_t requested = 0);

// Calls body(worker, index) for every index in [0, count). Each index is
// handled exactly once; results must not depend on which worker runs it.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t, std::size_t)>& body);

// Generator bound to one configuration; replica k draws from stream k.
class ReplicaRunner {
 public:
  explicit ReplicaRunner(const ExperimentConfig& cfg);
  const Graph& graph() const { return graph_; }
  const ExperimentConfig& config() const { return cfg_; }
  GenerationResult run(std::uint64_t replica) const;

 private:
  ExperimentConfig cfg_;
  Graph graph_;
};

struct StepStats {
  std::vector<std::uint64_t> steps;
  Summary summary;
  std::vector<double> curve;  // curve[k-1], recorded when cfg.record_curve
  std::vector<std::uint64_t> first_branch_steps;
  std::vector<std::uint64_t> first_branch_length;
  Summary first_steps;
  Summary first_length;
};

StepStats run_steps_experiment(const ExperimentConfig& cfg);

enum class TargetKind { uniform_all, uniform_containing, seeded_bias };

struct UniformityTarget {
  TargetKind kind = TargetKind::uniform_all;
  std::optional<Tree> tree;
  static UniformityTarget all() { return {}; }
  static UniformityTarget containing(Tree t) { return {TargetKind::uniform_containing, std::move(t)}; }
  static UniformityTarget seeded(Tree t) { return {TargetKind::seeded_bias, std::move(t)}; }
};

struct UniformityReport {
  TreeIndex index;
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;  // probabilities
  std::uint64_t samples = 0;
  ChiSquare chi;
  double tv = 0.0;
};

std::vector<double> target_law(const Graph& g, const TreeIndex& index, const UniformityTarget& target);
UniformityReport run_uniformity_experiment(const ExperimentConfig& cfg, const UniformityTarget& target);

struct Estimate {
  double value = 0.0;
  double se = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Fraction of replicas whose first branch with its anchor, joined to the
// starting tree, equals event.
Estimate first_branch_experiment(const ExperimentConfig& cfg, const Tree& event);

struct BranchLengthReport {
  std::size_t n = 0;
  std::vector<std::uint64_t> first;                         // first[h-1]
  std::map<std::size_t, std::vector<std::uint64_t>> by_prior;  // prior tree size k -> hist
  double first_tv(std::size_t k) const;
  double tv_at(std::size_t k) const;
};

BranchLengthReport branch_length_experiment(const ExperimentConfig& cfg);

// Joint law of (branch lengths, vertex set) at the i-th branch closure for
// Aldous-Broder and Wilson from vertex 0.
struct TransientReport {
  std::size_t cells = 0;
  std::uint64_t samples = 0;
  double tv = 0.0;
};

TransientReport transient_experiment(const GraphSpec& graph, std::size_t i, std::size_t replicas, std::uint64_t seed,
                                     std::size_t threads = 0);

struct HypercubeReport {
  std::size_t d = 0;
  StepStats edge_wilson;
  StepStats wilson;
  double ratio = 0.0;
};

HypercubeReport hypercube_conjecture_experiment(std::size_t d, std::size_t replicas, std::uint64_t seed,
                                                std::size_t threads = 0);

}  // namespace ustlab
