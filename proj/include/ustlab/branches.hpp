#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ustlab/graph.hpp"
#include "ustlab/tree.hpp"
#include "ustlab/walk.hpp"

namespace ustlab {

enum class Algorithm { aldous_broder, wilson, urn_tree, hybrid, edge_wilson, seeded_tree };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

struct BranchRecord {
  std::size_t index = 0;  // 1-based
  std::vector<Vertex> path;
  // Joins the branch to the tree built before it. For Aldous-Broder it meets
  // path.front(); for Wilson it meets path.back().
  std::optional<Edge> anchor;
  Vertex attach = -1;  // tree-side endpoint of the anchor
  std::size_t t_start = 0;  // sigma_out (Aldous-Broder) or walk start (Wilson)
  std::size_t t_stop = 0;   // sigma_in or sigma_hat
  std::size_t prior_size = 0;  // tree vertices before the branch
  std::size_t length() const { return path.size(); }
};

// Tree formed by `prior`, the first `count` branches and their anchors.
Tree partial_tree(const Tree& prior, std::span<const BranchRecord> branches, std::size_t count);

// Rebuilds the branches of a trace from its vertex sequence and segment
// structure. Marks, when present, must agree with the reconstruction.
// initial_size is the size of the tree the walk started from for Wilson
// and Edge-Wilson traces.
std::vector<BranchRecord> extract_branches(const WalkTrace& trace, Algorithm algorithm,
                                           std::size_t initial_size = 1);

}  // namespace ustlab
