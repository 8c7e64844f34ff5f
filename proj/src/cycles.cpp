#include "sgraph/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace sgraph {

namespace {

Block finalize_block(std::vector<std::pair<int, int>> edges) {
  Block b;
  b.edges = std::move(edges);
  std::vector<int> verts;
  for (const auto& [u, v] : b.edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  b.vertices = VertexSet(std::move(verts));
  b.is_edge = b.edges.size() == 1;
  if (!b.is_edge && b.edges.size() == b.vertices.ids().size()) {
    std::map<int, int> deg;
    for (const auto& [u, v] : b.edges) {
      ++deg[u];
      ++deg[v];
    }
    b.is_cycle = std::ranges::all_of(deg, [](const auto& kv) { return kv.second == 2; });
  }
  return b;
}

// Cyclic vertex sequence of a cycle block: start at the smallest vertex and
// step toward its smaller neighbor, never revisiting the previous vertex.
Cycle walk_cycle(const Block& b) {
  std::map<int, std::vector<int>> nb;
  for (const auto& [u, v] : b.edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (auto& [v, list] : nb) std::ranges::sort(list);

  const int start = b.vertices.ids().front();
  Cycle seq{start};
  int prev = -1, cur = start;
  do {
    const auto& options = nb[cur];
    const int next = options[0] == prev ? options[1] : options[0];
    seq.push_back(next);
    prev = cur;
    cur = next;
  } while (cur != start);
  seq.pop_back();  // drop the repeated start
  return seq;
}

}  // namespace

std::vector<Block> blocks(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<Block> out;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (const auto& [w, s] : g.neighbors(v)) {
      if (w == parent) continue;  // simple graph: exactly one parent edge
      if (disc[w] < 0) {
        estack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::pair<int, int>> edges;
          for (;;) {
            auto e = estack.back();
            estack.pop_back();
            edges.push_back(e);
            if (e == std::pair(v, w)) break;
          }
          out.push_back(finalize_block(std::move(edges)));
        }
      } else if (disc[w] < disc[v]) {
        estack.emplace_back(v, w);  // back edge
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return out;
}

CycleInventory cycles_vertex_disjoint(const SignedGraph& g) {
  CycleInventory inv;
  const auto bs = blocks(g);

  for (const auto& b : bs) {
    if (!b.is_edge && !b.is_cycle) {
      inv.disjoint = false;
      inv.witness_kind = DisjointWitnessKind::NonCycleBlock;
      inv.witness = b.vertices;
      return inv;
    }
  }

  std::vector<int> cycle_blocks_at(g.order(), 0);
  for (const auto& b : bs)
    if (b.is_cycle)
      for (int v : b.vertices) ++cycle_blocks_at[v];
  for (int v = 0; v < g.order(); ++v) {
    if (cycle_blocks_at[v] > 1) {
      inv.disjoint = false;
      inv.witness_kind = DisjointWitnessKind::SharedVertex;
      inv.witness = VertexSet{v};
      return inv;
    }
  }

  inv.disjoint = true;
  for (const auto& b : bs)
    if (b.is_cycle) inv.cycles.push_back(walk_cycle(b));
  std::ranges::sort(inv.cycles, {}, [](const Cycle& c) { return c.front(); });
  return inv;
}

Sign cycle_sign(const SignedGraph& g, const Cycle& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle has at least three vertices");
  std::vector<int> sorted = cycle;
  std::ranges::sort(sorted);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle vertices must be distinct");

  Sign product = Sign::Plus;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    product *= g.edge_sign(u, v);  // throws if not an edge of g
  }
  return product;
}

std::vector<int> cycle_membership(const SignedGraph& g) {
  std::vector<int> non_edge_blocks(g.order(), 0);
  std::vector<char> in_non_cycle(g.order(), 0);
  for (const auto& b : blocks(g)) {
    if (b.is_edge) continue;
    for (int v : b.vertices) {
      ++non_edge_blocks[v];
      if (!b.is_cycle) in_non_cycle[v] = 1;
    }
  }
  std::vector<int> membership(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (non_edge_blocks[v] == 0)
      membership[v] = 0;
    else if (in_non_cycle[v] || non_edge_blocks[v] > 1)
      membership[v] = 2;
    else
      membership[v] = 1;
  }
  return membership;
}

CycleStructure contract(const SignedGraph& g) {
  return contract(g, cycles_vertex_disjoint(g));
}

CycleStructure contract(const SignedGraph& g, const CycleInventory& inventory) {
  if (!inventory.disjoint)
    throw std::invalid_argument("contraction requires pairwise vertex-disjoint cycles");

  CycleStructure cs;
  cs.cycles = inventory.cycles;
  cs.disjoint = true;
  for (const auto& c : cs.cycles) cs.signs.push_back(cycle_sign(g, c));

  const int n = g.order();
  std::vector<int> cycle_of(n, -1);
  for (std::size_t i = 0; i < cs.cycles.size(); ++i)
    for (int v : cs.cycles[i]) cycle_of[v] = static_cast<int>(i);

  // Contiguous relabeling: a cyclic vertex takes the position of the smallest
  // original vertex of its cycle.
  cs.contraction_map.assign(n, -1);
  std::vector<int> cycle_new_id(cs.cycles.size(), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int ci = cycle_of[v];
    if (ci < 0) {
      cs.contraction_map[v] = next++;
    } else {
      if (cycle_new_id[ci] < 0) cycle_new_id[ci] = next++;
      cs.contraction_map[v] = cycle_new_id[ci];
    }
  }

  std::vector<SignedEdge> tedges;
  for (const auto& e : g.edges()) {
    const int cu = cs.contraction_map[e.u];
    const int cv = cs.contraction_map[e.v];
    if (cu == cv) continue;  // edge inside a contracted cycle
    tedges.push_back({cu, cv, Sign::Plus});
  }
  // Disjointness rules out two edges collapsing onto the same pair, so
  // from_edges' parallel-edge check cannot fire here.
  cs.t_g = SignedGraph::from_edges(next, std::move(tedges));
  cs.cyclic_vertices = VertexSet(cycle_new_id);
  cs.t_g_bracket = delete_vertices(cs.t_g, cs.cyclic_vertices).graph;
  assert(cs.t_g.size() == cs.t_g.order() - component_count(cs.t_g));  // a forest
  return cs;
}

SignedGraph switch_signs(const SignedGraph& g, const VertexSet& u_set) {
  for (int v : u_set)
    if (v >= g.order()) throw std::invalid_argument("switch set vertex out of range");
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (u_set.contains(e.u) != u_set.contains(e.v)) e.sign = e.sign * Sign::Minus;
  return SignedGraph::from_edges(g.order(), std::move(edges));
}

std::vector<char> spanning_forest_edges(const SignedGraph& g) {
  std::vector<char> in_forest(g.size(), 0);
  std::vector<char> visited(g.order(), 0);

  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    const auto& es = g.edges();
    auto it = std::ranges::lower_bound(es, std::pair(u, v), {}, [](const SignedEdge& e) {
      return std::pair(e.u, e.v);
    });
    return static_cast<int>(it - es.begin());
  };

  std::function<void(int)> dfs = [&](int v) {
    visited[v] = 1;
    for (const auto& [w, s] : g.neighbors(v)) {
      if (!visited[w]) {
        in_forest[edge_index(v, w)] = 1;
        dfs(w);
      }
    }
  };
  for (int v = 0; v < g.order(); ++v)
    if (!visited[v]) dfs(v);
  return in_forest;
}

SignedGraph normalize_signs(const SignedGraph& g) {
  // Potentials along the DFS forest make every tree edge positive; the other
  // signs are then determined by the (switching-invariant) cycle signs.
  std::vector<int> pot(g.order(), 0);
  std::function<void(int)> dfs = [&](int v) {
    for (const auto& [w, s] : g.neighbors(v)) {
      if (pot[w] == 0) {
        pot[w] = pot[v] * to_int(s);
        dfs(w);
      }
    }
  };
  for (int v = 0; v < g.order(); ++v) {
    if (pot[v] == 0) {
      pot[v] = 1;
      dfs(v);
    }
  }
  std::vector<int> flip;
  for (int v = 0; v < g.order(); ++v)
    if (pot[v] < 0) flip.push_back(v);
  return switch_signs(g, VertexSet(std::move(flip)));
}

}  // namespace sgraph
