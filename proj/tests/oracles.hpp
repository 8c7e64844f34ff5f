// Brute-force oracles, deliberately independent of the library's solvers:
// subset enumeration for independence, edge recursion for matching, path
// enumeration for cycles. Usable at desk scale only.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgraph/graph.hpp"

namespace oracle {

inline int brute_independence(const sgraph::SignedGraph& g) {
  const int n = g.order();
  if (n > 22) throw std::invalid_argument("brute-force independence capped at 22 vertices");
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges()) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    int size = 0;
    for (int v = 0; v < n; ++v) size += mask >> v & 1;
    best = std::max(best, size);
  }
  return best;
}

inline int brute_matching_rec(const std::vector<sgraph::SignedEdge>& edges, std::size_t idx,
                              std::vector<char>& used) {
  if (idx == edges.size()) return 0;
  int best = brute_matching_rec(edges, idx + 1, used);
  const auto& e = edges[idx];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = 1;
    best = std::max(best, 1 + brute_matching_rec(edges, idx + 1, used));
    used[e.u] = used[e.v] = 0;
  }
  return best;
}

inline int brute_matching(const sgraph::SignedGraph& g) {
  if (g.size() > 24) throw std::invalid_argument("brute-force matching capped at 24 edges");
  std::vector<char> used(g.order(), 0);
  return brute_matching_rec(g.edges(), 0, used);
}

/// Every simple cycle, once, as a canonical sequence: starts at its smallest
/// vertex and runs toward the smaller of that vertex's two cycle neighbors.
inline std::vector<std::vector<int>> brute_all_cycles(const sgraph::SignedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> in_path(n, 0);

  std::function<void(int, int)> extend = [&](int start, int v) {
    for (const auto& [w, s] : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(path);
      } else if (w > start && !in_path[w]) {
        path.push_back(w);
        in_path[w] = 1;
        extend(start, w);
        path.pop_back();
        in_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    in_path.assign(n, 0);
    in_path[s] = 1;
    extend(s, s);
  }
  return out;
}

inline bool cycles_pairwise_disjoint(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> hits(n, 0);
  for (const auto& c : cycles)
    for (int v : c)
      if (++hits[v] > 1) return false;
  return true;
}

inline std::set<std::pair<int, int>> cycle_edge_set(const std::vector<int>& cycle) {
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    edges.insert(std::minmax(u, v));
  }
  return edges;
}

/// True when two of the listed cycles pass through x without sharing an edge.
inline bool two_edge_disjoint_cycles_through(const std::vector<std::vector<int>>& cycles, int x) {
  std::vector<std::set<std::pair<int, int>>> through;
  for (const auto& c : cycles)
    if (std::find(c.begin(), c.end(), x) != c.end()) through.push_back(cycle_edge_set(c));
  for (std::size_t i = 0; i < through.size(); ++i) {
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      bool shared = false;
      for (const auto& e : through[i])
        if (through[j].count(e)) {
          shared = true;
          break;
        }
      if (!shared) return true;
    }
  }
  return false;
}

}  // namespace oracle
