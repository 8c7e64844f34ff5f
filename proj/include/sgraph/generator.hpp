#pragma once

#include <cstdint>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/rng.hpp"

namespace sgraph {

/// Deterministic recipe for a lower-optimal signed graph: admissible base
/// cycles plus a number of pendant-pair expansions, every step preserving
/// lower-optimality by construction.
struct BuildRecipe {
  std::uint64_t seed = 0;
  std::vector<int> cycle_lengths;  // each even and >= 4
  int isolated_vertices = 0;
  int expansion_steps = 0;
  int max_attach = 3;  // components a new expansion vertex may touch

  friend bool operator==(const BuildRecipe&, const BuildRecipe&) = default;
};

/// Throws std::invalid_argument when a cycle length is inadmissible (odd or
/// < 4) or a count is negative.
void validate(const BuildRecipe& recipe);

/// Disjoint union of the recipe's cycles and isolated vertices. A cycle of
/// length 2 mod 4 gets exactly one Minus edge, placed on the lexicographically
/// smallest edge; everything else is Plus. The result is lower-optimal.
SignedGraph base_components(const BuildRecipe& recipe);

/// Adds a pendant pair: a new vertex v joined to a new pendant u, with v
/// attached to at most one vertex in each of a randomly chosen set of existing
/// components. v cannot lie on any cycle, so lower-optimality is preserved.
/// Signs of the new edges are drawn uniformly; off-cycle signs never affect
/// any verdict.
SignedGraph expand_pendant_pair(const SignedGraph& g, Rng& rng, int max_attach = 3);

/// base_components followed by expansion_steps pendant-pair expansions.
SignedGraph generate(const BuildRecipe& recipe);

}  // namespace sgraph
