#include "sgraph/invariants.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sgraph {

namespace {

constexpr int kSolverVertexCap = 512;
constexpr int kWords = kSolverVertexCap / 64;

// Fixed-capacity vertex bitset. Word count is fixed by the construction-time
// order, so all set operations are branch-light loops over nw_ words.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(int n) : nw_((n + 63) / 64) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool none() const {
    for (int k = 0; k < nw_; ++k)
      if (w_[k]) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (int k = 0; k < nw_; ++k) c += std::popcount(w_[k]);
    return c;
  }

  int count_and(const VertexBits& o) const {
    int c = 0;
    for (int k = 0; k < nw_; ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  bool subset_of(const VertexBits& o) const {
    for (int k = 0; k < nw_; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  VertexBits& operator&=(const VertexBits& o) {
    for (int k = 0; k < nw_; ++k) w_[k] &= o.w_[k];
    return *this;
  }

  VertexBits& subtract(const VertexBits& o) {
    for (int k = 0; k < nw_; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  int first() const {
    for (int k = 0; k < nw_; ++k)
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int k = 0; k < nw_; ++k) {
      std::uint64_t word = w_[k];
      while (word) {
        fn(k * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const VertexBits& a, const VertexBits& b) {
    for (int k = 0; k < a.nw_; ++k)
      if (a.w_[k] != b.w_[k]) return false;
    return true;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int k = 0; k < nw_; ++k) {
      h ^= w_[k];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
  int nw_ = 0;
};

struct VertexBitsHash {
  std::size_t operator()(const VertexBits& b) const { return b.hash(); }
};

std::vector<VertexBits> neighbor_masks(const SignedGraph& g) {
  if (g.order() > kSolverVertexCap)
    throw std::invalid_argument("exact solvers are capped at 512 vertices");
  std::vector<VertexBits> adj(g.order(), VertexBits(g.order()));
  for (const auto& e : g.edges()) {
    adj[e.u].set(e.v);
    adj[e.v].set(e.u);
  }
  return adj;
}

class MisSolver {
 public:
  explicit MisSolver(const SignedGraph& g) : n_(g.order()), adj_(neighbor_masks(g)) {}

  IndependenceResult run() {
    VertexBits all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    best_ = -1;
    solve(all, VertexBits(n_), 0);

    IndependenceResult out;
    out.alpha = best_;
    std::vector<int> ids;
    best_set_.for_each([&](int v) { ids.push_back(v); });
    out.witness = VertexSet(std::move(ids));
    return out;
  }

 private:
  void solve(VertexBits open, VertexBits chosen, int size) {
    // Reductions. An isolated vertex always joins the set; a pendant vertex
    // can be taken ahead of its neighbor without losing optimality.
    for (;;) {
      int red = -1;
      open.for_each([&](int v) {
        if (red >= 0) return;
        if (adj_[v].count_and(open) <= 1) red = v;
      });
      if (red < 0) break;
      chosen.set(red);
      ++size;
      VertexBits nb = adj_[red];
      nb &= open;
      open.subtract(nb);
      open.reset(red);
    }

    if (open.none()) {
      if (size > best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }

    if (size + clique_cover_bound(open) <= best_) return;

    // branch vertex: maximum open degree, lowest id on ties
    int branch = -1, branch_deg = -1;
    open.for_each([&](int v) {
      int d = adj_[v].count_and(open);
      if (d > branch_deg) {
        branch_deg = d;
        branch = v;
      }
    });

    VertexBits with = open;
    with.subtract(adj_[branch]);
    with.reset(branch);
    VertexBits with_chosen = chosen;
    with_chosen.set(branch);
    solve(with, with_chosen, size + 1);

    VertexBits without = open;
    without.reset(branch);
    solve(without, chosen, size);
  }

  // Greedy partition of the open vertices into cliques; the number of cliques
  // bounds the independence number of the open subgraph from above.
  int clique_cover_bound(const VertexBits& open) const {
    std::vector<VertexBits> cliques;
    open.for_each([&](int v) {
      for (auto& q : cliques) {
        if (q.subset_of(adj_[v])) {
          q.set(v);
          return;
        }
      }
      VertexBits q(n_);
      q.set(v);
      cliques.push_back(q);
    });
    return static_cast<int>(cliques.size());
  }

  int n_;
  std::vector<VertexBits> adj_;
  int best_ = -1;
  VertexBits best_set_;
};

class MatchingSolver {
 public:
  explicit MatchingSolver(const SignedGraph& g) : adj_(neighbor_masks(g)), n_(g.order()) {}

  int run() {
    VertexBits all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    return solve(all);
  }

 private:
  int solve(VertexBits open) {
    // Drop isolated vertices first so memo keys are canonical.
    VertexBits isolated(n_);
    open.for_each([&](int v) {
      if (adj_[v].count_and(open) == 0) isolated.set(v);
    });
    open.subtract(isolated);
    if (open.none()) return 0;

    if (auto it = memo_.find(open); it != memo_.end()) return it->second;

    // A pendant edge always belongs to some maximum matching.
    int result = -1;
    int pendant = -1;
    open.for_each([&](int v) {
      if (pendant < 0 && adj_[v].count_and(open) == 1) pendant = v;
    });
    if (pendant >= 0) {
      VertexBits nb = adj_[pendant];
      nb &= open;
      int u = nb.first();
      VertexBits rest = open;
      rest.reset(pendant);
      rest.reset(u);
      result = 1 + solve(rest);
    } else {
      int v = open.first();
      VertexBits rest = open;
      rest.reset(v);
      result = solve(rest);  // v stays unmatched
      VertexBits nb = adj_[v];
      nb &= open;
      nb.for_each([&](int u) {
        VertexBits r2 = rest;
        r2.reset(u);
        result = std::max(result, 1 + solve(r2));
      });
    }

    memo_.emplace(open, result);
    return result;
  }

  std::vector<VertexBits> adj_;
  int n_;
  std::unordered_map<VertexBits, int, VertexBitsHash> memo_;
};

}  // namespace

IndependenceResult independence_number(const SignedGraph& g) { return MisSolver(g).run(); }

int matching_number(const SignedGraph& g) { return MatchingSolver(g).run(); }

int cyclomatic_number(const SignedGraph& g) {
  return g.size() - g.order() + component_count(g);
}

InvariantBundle invariant_bundle(const SignedGraph& g) {
  InvariantBundle b;
  b.n = g.order();
  b.alpha = independence_number(g).alpha;
  b.matching = matching_number(g);
  b.components = component_count(g);
  b.cyclomatic = g.size() - g.order() + b.components;
  return b;
}

}  // namespace sgraph
