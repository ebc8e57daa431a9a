#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "ustlab/graph.hpp"
#include "ustlab/rng.hpp"
#include "ustlab/tree.hpp"

namespace ustlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact Laplacian cofactor determinant; requires integer weights.
BigInt spanning_tree_count(const Graph& g);
// Weighted count (sum over trees of the product of edge weights).
double weighted_spanning_tree_count(const Graph& g);

// Dense ids for the spanning trees of one graph, in the order produced by
// enumerate_spanning_trees (lexicographic in the sorted edge list).
class TreeIndex {
 public:
  TreeIndex() = default;
  TreeIndex(const Graph& g, std::vector<Tree> trees);

  std::size_t size() const { return trees_.size(); }
  const Tree& tree(std::size_t id) const { return trees_.at(id); }
  const std::vector<Tree>& trees() const { return trees_; }
  std::optional<std::size_t> find(const Tree& t) const;
  // Edge-id bitmask of a tree over the host graph's edges().
  std::vector<std::uint64_t> key(const Tree& t) const;
  void write(std::ostream& out) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const;
  };
  std::vector<Edge> host_edges_;
  std::vector<Tree> trees_;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, KeyHash> ids_;
};

TreeIndex enumerate_spanning_trees(const Graph& g, std::size_t cap = 1'000'000);

BigInt count_trees_containing(const Graph& g, const Tree& t);

// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Hitting quantities of the random walk on g. E_v(h_v) = 0 in the matrices.
// omega and phi use the return-time convention (a walk started on the target
// counts its first return); kemeny and phi_zero are the same sums with
// E_v(h_v) = 0 and E_i(h_e) = 0 for i in e. The differences omega - phi and
// kemeny - phi_zero agree.
struct HittingStats {
  std::size_t n = 0;
  std::vector<double> stationary;
  Matrix vertex;            // vertex(i, j) = E_i(h_j)
  std::vector<Edge> edges;  // non-loop edges, uniform weight under nu
  Matrix edge;              // edge(i, e) = E_i(h_{u,v})
  Matrix first_v;           // first_v(i, e) = P_i(h_v < h_u) for e = {u, v}, u < v
  double kemeny = 0.0;
  double omega = 0.0;
  double phi_zero = 0.0;
  double phi = 0.0;
};

HittingStats hitting_stats(const Graph& g);

// Single-target solves for graphs that are vertex- and edge-transitive; uses
// vertex 0 and the first edge as representatives.
struct TransitiveHitting {
  Edge edge;
  double kemeny = 0.0;
  double omega = 0.0;
  double phi_zero = 0.0;
  double phi = 0.0;
  double adjacent_hitting = 0.0;  // E_v(h_u) across the representative edge
  double first_hit_mass = 0.0;    // sum_i pi(i) P_i(h_v < h_u)
};

TransitiveHitting transitive_hitting(const Graph& g);

struct SpeedupResiduals {
  double omega_minus_phi = 0.0;
  double general_rhs = 0.0;
  double general = 0.0;
  std::optional<double> transitive;  // |(omega - phi) - E_v(h_u)/2|, edge-independent case only
};

// The transitive residual is reported when E_v(h_u) is the same for all
// edges, which holds on the edge-transitive test graphs.
SpeedupResiduals speedup_residual(const Graph& g);
SpeedupResiduals speedup_residual(const HittingStats& h);

// Sub-tree law as an explicit table.
using SubtreeLaw = std::map<std::vector<Edge>, std::pair<Tree, double>>;
void add_mass(SubtreeLaw& law, const Tree& t, double p);

struct StageOneReport {
  TreeIndex index;
  std::vector<double> value;  // F(S) per tree id
  double residual = 0.0;      // max |F(S) - F(S')|
};

StageOneReport stage_one(const Graph& g, const SubtreeLaw& law);
double stage_one_residual(const Graph& g, const SubtreeLaw& law);

// Exact law of the first Aldous-Broder branch with its anchor on C_n from a
// uniform start.
SubtreeLaw cycle_first_branch_law(std::size_t n);
// Exact law of the first-entrance tree at time min(k, cover time) of a walk
// on C_n from a uniform start.
SubtreeLaw cycle_walk_subtree_law(std::size_t n, std::size_t k);

struct CollapsedCheck {
  double tv_collapsed = 0.0;
  double tv_plain = 0.0;
  std::size_t targets = 0;
  double tv() const { return tv_collapsed > tv_plain ? tv_collapsed : tv_plain; }
};

CollapsedCheck collapsed_wilson_check(const Graph& g, const Tree& t, std::size_t samples, RngStream& rng);

struct CycleCheck {
  double residual = 0.0;
  double standard_error = 0.0;
  double exact_residual = 0.0;  // residual of the exact law
  std::size_t distinct = 0;
};

CycleCheck cycle_rw_subtree_check(std::size_t n, std::size_t k, std::size_t samples, RngStream& rng);

// Canonical unrooted shape of a tree (vertex labels ignored).
std::string canonical_shape(const Tree& t);
// Number of sub-trees of host isomorphic to pattern.
std::size_t count_isomorphic_subtrees(const Tree& host, const Tree& pattern);

}  // namespace ustlab
