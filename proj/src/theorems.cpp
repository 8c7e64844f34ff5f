#include "sgraph/theorems.hpp"

#include <cassert>
#include <deque>

#include "sgraph/invariants.hpp"
#include "sgraph/linalg.hpp"
#include "sgraph/rng.hpp"

namespace sgraph {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

bool cycle_residue_sign_ok(int length, Sign sign) {
  return (length % 4 == 0 && sign == Sign::Plus) ||
         (length % 4 == 2 && sign == Sign::Minus);
}

namespace {

int rank_of(const SignedGraph& g) { return rank_exact(adjacency_matrix(g)); }
int alpha_of(const SignedGraph& g) { return independence_number(g).alpha; }

SignedGraph induced(const SignedGraph& g, const std::vector<int>& keep) {
  std::vector<char> kept(g.order(), 0);
  for (int v : keep) kept[v] = 1;
  std::vector<int> drop;
  for (int v = 0; v < g.order(); ++v)
    if (!kept[v]) drop.push_back(v);
  return delete_vertices(g, VertexSet(std::move(drop))).graph;
}

SignedGraph without_vertex(const SignedGraph& g, int v) {
  return delete_vertices(g, VertexSet{v}).graph;
}

bool is_bipartite(const SignedGraph& g) {
  std::vector<int> color(g.order(), 0);
  std::deque<int> queue;
  for (int root = 0; root < g.order(); ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& [w, s] : g.neighbors(v)) {
        if (color[w] == 0) {
          color[w] = -color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int expected_cycle_rank(int length, Sign sign) {
  if (length % 2 == 1) return length;
  if (length % 4 == 0) return sign == Sign::Plus ? length - 2 : length;
  return sign == Sign::Minus ? length - 2 : length;  // length 2 mod 4
}

}  // namespace

StructuralResult is_lower_optimal_structural(const SignedGraph& g) {
  StructuralResult res;
  StructuralWitness& w = res.witness;

  const CycleInventory inv = cycles_vertex_disjoint(g);
  w.cycles_disjoint = inv.disjoint;
  w.witness_kind = inv.witness_kind;
  w.witness = inv.witness;
  if (!inv.disjoint) {
    res.lower_optimal = false;  // the other conditions stay unevaluated
    return res;
  }

  bool cycles_ok = true;
  for (const auto& c : inv.cycles) {
    CycleVerdict v;
    v.cycle = c;
    v.length = static_cast<int>(c.size());
    v.sign = cycle_sign(g, c);
    v.residue_sign_ok = cycle_residue_sign_ok(v.length, v.sign);
    cycles_ok = cycles_ok && v.residue_sign_ok;
    w.cycle_verdicts.push_back(std::move(v));
  }
  w.cycle_condition = cycles_ok ? CheckStatus::Pass : CheckStatus::Fail;

  const CycleStructure cs = contract(g, inv);
  w.alpha_t_g = alpha_of(cs.t_g);
  w.alpha_t_g_bracket = alpha_of(cs.t_g_bracket);
  w.cyclomatic = cyclomatic_number(g);
  assert(w.cyclomatic == static_cast<int>(inv.cycles.size()));
  const bool contraction_ok = w.alpha_t_g == w.alpha_t_g_bracket + w.cyclomatic;
  w.contraction_condition = contraction_ok ? CheckStatus::Pass : CheckStatus::Fail;

  res.lower_optimal = cycles_ok && contraction_ok;
  return res;
}

bool is_lower_optimal_direct(const SignedGraph& g) {
  const int n = g.order();
  return rank_of(g) + 2 * alpha_of(g) == 2 * n - 2 * cyclomatic_number(g);
}

OptimalityReport bound_check(const SignedGraph& g) {
  OptimalityReport rep;
  rep.n = g.order();
  rep.rank = rank_of(g);
  rep.alpha = alpha_of(g);
  rep.cyclomatic = cyclomatic_number(g);
  rep.lower_bound = 2 * rep.n - 2 * rep.cyclomatic;
  rep.upper_bound = 2 * rep.n;
  rep.value = rep.rank + 2 * rep.alpha;
  rep.bound_ok = rep.lower_bound <= rep.value && rep.value <= rep.upper_bound;
  rep.lower_optimal_direct = rep.value == rep.lower_bound;

  StructuralResult s = is_lower_optimal_structural(g);
  rep.lower_optimal_structural = s.lower_optimal;
  rep.structural = std::move(s.witness);
  rep.agreement = rep.lower_optimal_direct == rep.lower_optimal_structural;
  return rep;
}

bool check_equivalence(const SignedGraph& g) {
  return is_lower_optimal_direct(g) == is_lower_optimal_structural(g).lower_optimal;
}

std::vector<CheckResult> lemma_suite(const SignedGraph& g, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const int n = g.order();
  const int r = rank_of(g);
  const int a = alpha_of(g);
  const int c = cyclomatic_number(g);

  auto add = [&](std::string id, CheckStatus st, std::string detail = "") {
    out.push_back({std::move(id), st, std::move(detail)});
  };
  auto verdict = [&](std::string id, bool ok, std::string detail) {
    add(std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : std::move(detail));
  };

  {  // induced subgraphs never gain rank
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 30 && ok; ++t) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (rng.coin()) keep.push_back(v);
      const SignedGraph h = induced(g, keep);
      if (rank_of(h) > r) {
        ok = false;
        detail = "induced subgraph on " + std::to_string(keep.size()) + " vertices exceeds rank";
      }
    }
    verdict("rank_induced_monotone", ok, std::move(detail));
  }

  {  // rank is additive over components
    int sum = 0;
    for (const auto& comp : components(g)) sum += rank_of(comp.graph);
    verdict("rank_components_additive", sum == r, "component ranks sum to " + std::to_string(sum));
  }

  verdict("rank_zero_iff_empty", (r == 0) == (g.size() == 0), "rank " + std::to_string(r));

  {  // deleting a pendant vertex and its neighbor drops the rank by exactly 2
    const VertexSet pend = pendant_vertices(g);
    if (pend.empty()) {
      add("rank_pendant_pair", CheckStatus::Skipped, "no pendant vertex");
    } else {
      bool ok = true;
      std::string detail;
      for (int y : pend) {
        const int x = g.neighbors(y).front().first;
        const SignedGraph rest = delete_vertices(g, VertexSet{x, y}).graph;
        if (rank_of(rest) + 2 != r) {
          ok = false;
          detail = "pendant " + std::to_string(y) + " with neighbor " + std::to_string(x);
          break;
        }
      }
      verdict("rank_pendant_pair", ok, std::move(detail));
    }
  }

  if (n == 0) {
    add("rank_vertex_deletion", CheckStatus::Skipped, "empty graph");
    add("alpha_vertex_deletion", CheckStatus::Skipped, "empty graph");
    add("cyclomatic_vertex_deletion", CheckStatus::Skipped, "empty graph");
  } else {
    bool rank_ok = true, alpha_ok = true, cyc_ok = true;
    std::string rank_det, alpha_det, cyc_det;
    const std::vector<int> membership = cycle_membership(g);
    // Two cycle-carrying blocks meeting at x certify two edge-disjoint cycles
    // through x; cycles that merely share edges need not drop c by two.
    std::vector<int> cycle_blocks_at(n, 0);
    for (const auto& b : blocks(g))
      if (!b.is_edge)
        for (int v : b.vertices) ++cycle_blocks_at[v];
    for (int x = 0; x < n; ++x) {
      const SignedGraph h = without_vertex(g, x);
      const int rh = rank_of(h);
      if (!(r - 2 <= rh && rh <= r) && rank_ok) {
        rank_ok = false;
        rank_det = "vertex " + std::to_string(x);
      }
      const int ah = alpha_of(h);
      if (!(a - 1 <= ah && ah <= a) && alpha_ok) {
        alpha_ok = false;
        alpha_det = "vertex " + std::to_string(x);
      }
      const int ch = cyclomatic_number(h);
      const bool this_ok = membership[x] == 0        ? ch == c
                           : cycle_blocks_at[x] >= 2 ? ch <= c - 2
                                                     : ch <= c - 1;
      if (!this_ok && cyc_ok) {
        cyc_ok = false;
        cyc_det = "vertex " + std::to_string(x);
      }
    }
    verdict("rank_vertex_deletion", rank_ok, std::move(rank_det));
    verdict("alpha_vertex_deletion", alpha_ok, std::move(alpha_det));
    verdict("cyclomatic_vertex_deletion", cyc_ok, std::move(cyc_det));
  }

  {  // deleting an edge never shrinks a maximum independent set
    if (g.size() == 0) {
      add("alpha_edge_deletion", CheckStatus::Skipped, "no edges");
    } else {
      bool ok = true;
      std::string detail;
      for (const auto& e : g.edges()) {
        if (alpha_of(delete_edge(g, e.u, e.v)) < a) {
          ok = false;
          detail = "edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}";
          break;
        }
      }
      verdict("alpha_edge_deletion", ok, std::move(detail));
    }
  }

  {  // alpha(G) = alpha(G - x) = alpha(G - {x, y}) + 1 for pendant y, neighbor x
    const VertexSet pend = pendant_vertices(g);
    if (pend.empty()) {
      add("alpha_pendant_reduction", CheckStatus::Skipped, "no pendant vertex");
    } else {
      bool ok = true;
      std::string detail;
      for (int y : pend) {
        const int x = g.neighbors(y).front().first;
        const int without_x = alpha_of(without_vertex(g, x));
        const int without_xy = alpha_of(delete_vertices(g, VertexSet{x, y}).graph);
        if (a != without_x || a != without_xy + 1) {
          ok = false;
          detail = "pendant " + std::to_string(y) + " with neighbor " + std::to_string(x);
          break;
        }
      }
      verdict("alpha_pendant_reduction", ok, std::move(detail));
    }
  }

  if (c == 0 && n > 0) {
    const int m = matching_number(g);
    verdict("forest_rank_matching", r == 2 * m, "r=" + std::to_string(r) + " m=" + std::to_string(m));
    verdict("forest_bound_tight", r + 2 * a == 2 * n, "value " + std::to_string(r + 2 * a));
  } else {
    add("forest_rank_matching", CheckStatus::Skipped, "not a forest");
    add("forest_bound_tight", CheckStatus::Skipped, "not a forest");
  }

  if (n > 0 && is_bipartite(g)) {
    const int m = matching_number(g);
    verdict("bipartite_alpha_matching", a + m == n,
            "alpha=" + std::to_string(a) + " m=" + std::to_string(m));
  } else {
    add("bipartite_alpha_matching", CheckStatus::Skipped, "not bipartite");
  }

  {  // single signed cycle: rank follows the length residue and cycle sign
    bool is_cycle = n >= 3 && g.size() == n && is_connected(g);
    for (int v = 0; is_cycle && v < n; ++v) is_cycle = g.degree(v) == 2;
    if (!is_cycle) {
      add("cycle_rank_residue", CheckStatus::Skipped, "not a cycle");
    } else {
      Sign s = Sign::Plus;
      for (const auto& e : g.edges()) s *= e.sign;
      verdict("cycle_rank_residue", r == expected_cycle_rank(n, s),
              "rank " + std::to_string(r) + " for length " + std::to_string(n));
    }
  }

  {  // pruning all leaves of a tree costs at most one alpha unit per leaf
    const bool tree = n >= 2 && c == 0 && is_connected(g);
    if (!tree) {
      add("tree_pendant_alpha_bound", CheckStatus::Skipped, "not a tree with an edge");
    } else {
      const VertexSet pend = pendant_vertices(g);
      const int trimmed = alpha_of(delete_vertices(g, pend).graph);
      verdict("tree_pendant_alpha_bound", a <= trimmed + pend.size(),
              "alpha=" + std::to_string(a) + " trimmed=" + std::to_string(trimmed));
    }
  }

  return out;
}

std::vector<CheckResult> corollary_suite(const SignedGraph& g) {
  static const char* ids[5] = {"rank_preserved", "deletion_lower_optimal", "cyclomatic_drops_one",
                               "alpha_preserved", "single_cycle_not_quasi_pendant"};
  std::vector<CheckResult> out;
  auto all = [&](CheckStatus st, const std::string& detail) {
    for (const char* id : ids) out.push_back({id, st, detail});
  };

  if (!is_lower_optimal_direct(g)) {
    all(CheckStatus::Skipped, "graph is not lower-optimal");
    return out;
  }
  const std::vector<int> membership = cycle_membership(g);
  std::vector<int> cycle_vertices;
  for (int v = 0; v < g.order(); ++v)
    if (membership[v] >= 1) cycle_vertices.push_back(v);
  if (cycle_vertices.empty()) {
    all(CheckStatus::Skipped, "no vertex lies on a cycle");
    return out;
  }

  const int r = rank_of(g);
  const int a = alpha_of(g);
  const int c = cyclomatic_number(g);
  const VertexSet quasi = quasi_pendant_vertices(g);

  bool ok[5] = {true, true, true, true, true};
  std::string detail[5];
  for (int u : cycle_vertices) {
    const SignedGraph h = without_vertex(g, u);
    const bool claims[5] = {
        rank_of(h) == r,
        is_lower_optimal_direct(h),
        cyclomatic_number(h) == c - 1,
        alpha_of(h) == a,
        membership[u] == 1 && !quasi.contains(u),
    };
    for (int k = 0; k < 5; ++k) {
      if (!claims[k] && ok[k]) {
        ok[k] = false;
        detail[k] = "cycle vertex " + std::to_string(u);
      }
    }
  }
  for (int k = 0; k < 5; ++k)
    out.push_back({ids[k], ok[k] ? CheckStatus::Pass : CheckStatus::Fail, detail[k]});
  return out;
}

}  // namespace sgraph
