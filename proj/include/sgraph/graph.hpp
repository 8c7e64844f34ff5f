#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sgraph/sign.hpp"

namespace sgraph {

/// Undirected edge {u, v}, stored with u < v, plus its sign.
struct SignedEdge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Plus;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);
  VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

  bool contains(int v) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> ids_;
};

/// Immutable simple undirected graph with a sign on every edge.
/// Vertices are dense ids 0..n-1. All operations on it are pure; values can be
/// shared freely between threads.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Graph on n vertices with no edges.
  static SignedGraph empty(int n);

  /// Builds a graph after validating simplicity. Endpoints may come in either
  /// order; loops and parallel edges are rejected.
  static SignedGraph from_edges(int n, std::vector<SignedEdge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  /// Neighbors of v with the sign of the connecting edge, sorted by id.
  const std::vector<std::pair<int, Sign>>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  Sign edge_sign(int u, int v) const;  // throws if the edge is absent

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<SignedEdge> edges_;                       // sorted by (u, v)
  std::vector<std::vector<std::pair<int, Sign>>> adj_;  // sorted neighbor lists
};

/// Result of a vertex deletion: the surviving graph with vertices relabeled
/// contiguously, plus the relabeling in both directions.
struct DeletedGraph {
  SignedGraph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

/// Removes the vertices in xs and every incident edge; signs are preserved.
DeletedGraph delete_vertices(const SignedGraph& g, const VertexSet& xs);

/// Removes a single edge; throws if it is absent.
SignedGraph delete_edge(const SignedGraph& g, int u, int v);

/// One connected component, relabeled 0..k-1 in ascending order of the
/// original ids; vertices[new] = old.
struct Component {
  SignedGraph graph;
  std::vector<int> vertices;
};

/// Connected components ordered by smallest original vertex.
std::vector<Component> components(const SignedGraph& g);

int component_count(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

/// Vertices of degree exactly one.
VertexSet pendant_vertices(const SignedGraph& g);

/// Vertices adjacent to a pendant vertex that are not themselves pendant.
/// A vertex of degree >= 2 whose neighbors are all pendant still qualifies.
VertexSet quasi_pendant_vertices(const SignedGraph& g);

SignedGraph path_graph(int n);                                   // edges (i, i+1)
SignedGraph cycle_graph(int n);                                  // all Plus, n >= 3
SignedGraph cycle_graph(int n, const std::vector<Sign>& signs);  // signs[i] on edge (i, (i+1) mod n)
SignedGraph star_graph(int n);                                   // center 0
SignedGraph complete_graph(int n);

/// Disjoint union; part k's vertices are shifted by the combined order of
/// parts 0..k-1.
SignedGraph disjoint_union(std::span<const SignedGraph> parts);

/// Same graph with every sign set to Plus.
SignedGraph underlying(const SignedGraph& g);

}  // namespace sgraph
