#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

/// Hard cap on the sweep order; labeled enumeration is 2^(n(n-1)/2).
inline constexpr int kMaxEnumerationOrder = 10;

/// Edge positions used by the enumeration bitmask, in lexicographic order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::vector<std::pair<int, int>> edge_positions(int n);

std::uint64_t underlying_mask_count(int n);  // 2^(n(n-1)/2)

/// The all-Plus graph whose edge set is the given bitmask over edge_positions.
SignedGraph underlying_from_mask(int n, std::uint64_t mask);

/// Visits every labeled simple graph on n vertices exactly once, in ascending
/// bitmask order, optionally filtered to connected graphs.
void for_each_underlying(int n, bool connected_only,
                         const std::function<void(const SignedGraph&)>& visit);

std::vector<SignedGraph> enumerate_underlying(int n, bool connected_only);

/// Visits signings of g. With mod_switching, edges of the deterministic DFS
/// spanning forest stay Plus and only the 2^c(G) sign choices on the
/// remaining edges are visited, exactly one representative per switching
/// class. Otherwise all 2^|E| signings are visited.
void for_each_signing(const SignedGraph& g, bool mod_switching,
                      const std::function<void(const SignedGraph&)>& visit);

std::vector<SignedGraph> enumerate_signings(const SignedGraph& g, bool mod_switching);

struct EnumerationOptions {
  int max_order = 5;
  bool connected_only = false;
  bool mod_switching = false;
  int workers = 1;
};

/// Outcome of a sweep. bound_violations and equivalence_mismatches must both
/// be zero on every completed run; counts are deterministic given the mode
/// and max_order, independent of the worker count.
struct EnumerationSummary {
  int max_order = 0;
  bool connected_only = false;
  bool mod_switching = false;
  std::uint64_t graphs_visited = 0;
  std::uint64_t signings_visited = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t equivalence_mismatches = 0;
  std::vector<std::uint64_t> lower_optimal_count;  // index = order - 1
  std::vector<std::string> counterexamples;        // edge-list serializations
  std::chrono::milliseconds elapsed{0};

  bool clean() const { return bound_violations == 0 && equivalence_mismatches == 0; }

  /// Equality ignores elapsed time.
  friend bool operator==(const EnumerationSummary& a, const EnumerationSummary& b) {
    return a.max_order == b.max_order && a.connected_only == b.connected_only &&
           a.mod_switching == b.mod_switching && a.graphs_visited == b.graphs_visited &&
           a.signings_visited == b.signings_visited && a.bound_violations == b.bound_violations &&
           a.equivalence_mismatches == b.equivalence_mismatches &&
           a.lower_optimal_count == b.lower_optimal_count && a.counterexamples == b.counterexamples;
  }
};

/// Runs the bound check and the direct/structural equivalence check on every
/// signed graph of order 1..max_order. Workers own contiguous bitmask ranges
/// end to end and share nothing mutable; the merge is a commutative-monoid
/// fold, so the summary is identical for any worker count.
EnumerationSummary verify_up_to(const EnumerationOptions& options);

}  // namespace sgraph
