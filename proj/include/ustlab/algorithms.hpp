#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ustlab/branches.hpp"
#include "ustlab/graph.hpp"
#include "ustlab/rng.hpp"
#include "ustlab/tree.hpp"
#include "ustlab/walk.hpp"

namespace ustlab {

struct GenerationResult {
  Tree tree;
  WalkTrace trace;
  std::vector<BranchRecord> branches;
  std::uint64_t rw_steps = 0;
  // growth[k-1] is the step count at which the tree first had k edges.
  std::vector<std::uint64_t> growth;
  // Tree the walk phase started from (Wilson initial condition, the edge
  // drawn by Edge-Wilson, or the Aldous-Broder part of Hybrid).
  Tree initial;
  bool uniformity_guaranteed = true;
  std::string warning;
};

GenerationResult aldous_broder(const Graph& g, std::optional<Vertex> root, RngStream& rng);

// An empty initial tree means a uniformly drawn root.
GenerationResult wilson(const Graph& g, const Tree& initial, RngStream& rng);
GenerationResult wilson(const Graph& g, Vertex root, RngStream& rng);

struct UrnOutcome {
  std::vector<std::vector<Vertex>> classes;  // classes[0] == {r}; n classes
};

// Draw sequence [r, draw1, draw2, ...] is written to draws when given.
UrnOutcome color_assignment(std::size_t n, Vertex r, RngStream& rng, WalkTrace* draws = nullptr);
GenerationResult urn_tree(std::size_t n, Vertex r, RngStream& rng);

// Aldous-Broder until the branch-th branch closes, then Wilson.
GenerationResult hybrid(const Graph& g, std::size_t branches, RngStream& rng,
                        std::optional<Vertex> root = std::nullopt);

GenerationResult edge_wilson(const Graph& g, RngStream& rng);

// Wilson on the complete graph from the seed, then a uniform relabeling.
Tree seeded_tree(const Graph& complete, const Tree& seed, RngStream& rng);
Tree seeded_tree(std::size_t n, const Tree& seed, RngStream& rng);

}  // namespace ustlab
