#pragma once

#include <utility>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

/// Block of the block decomposition: a maximal 2-connected subgraph or a
/// bridge edge. Every edge of the graph lies in exactly one block.
struct Block {
  VertexSet vertices;
  std::vector<std::pair<int, int>> edges;
  bool is_edge = false;   // single bridge edge
  bool is_cycle = false;  // |E| == |V| and every vertex has degree 2 inside
};

/// Hopcroft-Tarjan block decomposition (DFS low-links). Blocks come out in a
/// deterministic order: roots ascend, neighbors are visited in id order.
std::vector<Block> blocks(const SignedGraph& g);

/// A cycle as its cyclic vertex sequence, canonicalized: starts at the
/// smallest vertex and proceeds toward its smaller neighbor on the cycle.
using Cycle = std::vector<int>;

enum class DisjointWitnessKind { None, NonCycleBlock, SharedVertex };

/// Verdict of the pairwise-vertex-disjointness test. The cycles of a graph
/// are pairwise vertex-disjoint exactly when every block is an edge or a
/// cycle and no vertex lies in two cycle blocks; blocks are the right
/// granularity because under that condition every cycle is a block.
struct CycleInventory {
  bool disjoint = false;
  std::vector<Cycle> cycles;  // the c(G) cycles, ordered by smallest vertex; valid when disjoint
  DisjointWitnessKind witness_kind = DisjointWitnessKind::None;
  VertexSet witness;  // offending block's vertices, or the shared vertex
};

CycleInventory cycles_vertex_disjoint(const SignedGraph& g);

/// Product of the edge signs along the cycle; throws if the sequence is not
/// a cycle of g.
Sign cycle_sign(const SignedGraph& g, const Cycle& cycle);

/// For each vertex: 0 = lies on no cycle, 1 = on exactly one cycle,
/// 2 = on two or more distinct cycles. Derived from the block decomposition;
/// every vertex of a 2-connected non-cycle block lies on at least two cycles.
std::vector<int> cycle_membership(const SignedGraph& g);

/// Contraction of every cycle to a single vertex, defined only when the
/// cycles are pairwise vertex-disjoint. t_g is an all-Plus forest; cyclic
/// vertices keep the label position of the smallest vertex of their cycle.
struct CycleStructure {
  std::vector<Cycle> cycles;
  std::vector<Sign> signs;  // per cycle, product of its edge signs
  bool disjoint = true;
  SignedGraph t_g;                // the contraction forest
  SignedGraph t_g_bracket;        // t_g minus the cyclic vertices
  VertexSet cyclic_vertices;      // ids in t_g's labeling
  std::vector<int> contraction_map;  // vertex of g -> vertex of t_g
};

CycleStructure contract(const SignedGraph& g);
CycleStructure contract(const SignedGraph& g, const CycleInventory& inventory);

/// Negates every edge with exactly one end in u_set. An involution; cycle
/// signs and the adjacency rank are invariant under it.
SignedGraph switch_signs(const SignedGraph& g, const VertexSet& u_set);

/// Canonical representative of the switching class: switches so that every
/// edge of the lowest-id DFS spanning forest carries Plus.
SignedGraph normalize_signs(const SignedGraph& g);

/// Edge flags for the deterministic DFS spanning forest (lowest-id roots,
/// neighbors in ascending order); aligned with g.edges().
std::vector<char> spanning_forest_edges(const SignedGraph& g);

}  // namespace sgraph
