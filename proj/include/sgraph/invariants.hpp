#pragma once

#include "sgraph/graph.hpp"

namespace sgraph {

/// The combinatorial invariants of one graph. alpha <= n, matching <= n/2,
/// cyclomatic = |E| - n + components >= 0.
struct InvariantBundle {
  int n = 0;
  int alpha = 0;
  int matching = 0;
  int cyclomatic = 0;
  int components = 0;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

struct IndependenceResult {
  int alpha = 0;
  VertexSet witness;  // pairwise non-adjacent, |witness| = alpha
};

/// Exact independence number of the underlying graph with one maximum
/// independent set as witness. Branch and bound: isolated- and pendant-vertex
/// reductions, then branching on a maximum-degree vertex with a greedy clique
/// cover as upper bound. Ties always break toward the lowest vertex id, so
/// the witness is reproducible.
IndependenceResult independence_number(const SignedGraph& g);

/// Exact matching number via memoized exhaustive branching on the lowest
/// uncovered vertex. Not a blossom implementation; graphs here are desk scale.
int matching_number(const SignedGraph& g);

/// |E| - |V| + number of components.
int cyclomatic_number(const SignedGraph& g);

InvariantBundle invariant_bundle(const SignedGraph& g);

}  // namespace sgraph
