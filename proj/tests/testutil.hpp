#pragma once

#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/rng.hpp"

namespace testutil {

/// G(n, p) with p in percent, signs uniform.
inline sgraph::SignedGraph random_graph(sgraph::Rng& rng, int n, int edge_percent) {
  std::vector<sgraph::SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_percent) edges.push_back({u, v, rng.random_sign()});
  return sgraph::SignedGraph::from_edges(n, std::move(edges));
}

/// Random signed forest: each vertex after the first either starts a new
/// component or attaches to an earlier vertex.
inline sgraph::SignedGraph random_forest(sgraph::Rng& rng, int n) {
  std::vector<sgraph::SignedEdge> edges;
  for (int v = 1; v < n; ++v) {
    if (rng.below(4) == 0) continue;  // new root
    edges.push_back({rng.below(v), v, rng.random_sign()});
  }
  return sgraph::SignedGraph::from_edges(n, std::move(edges));
}

inline sgraph::SignedGraph random_tree(sgraph::Rng& rng, int n) {
  std::vector<sgraph::SignedEdge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({rng.below(v), v, rng.random_sign()});
  return sgraph::SignedGraph::from_edges(n, std::move(edges));
}

/// Outer 5-cycle, inner pentagram, spokes between them.
inline sgraph::SignedGraph petersen() {
  std::vector<sgraph::SignedEdge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, sgraph::Sign::Plus});
    edges.push_back({5 + i, 5 + (i + 2) % 5, sgraph::Sign::Plus});
    edges.push_back({i, 5 + i, sgraph::Sign::Plus});
  }
  return sgraph::SignedGraph::from_edges(10, std::move(edges));
}

}  // namespace testutil
