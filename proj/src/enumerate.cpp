#include "sgraph/enumerate.hpp"

#include <stdexcept>
#include <thread>

#include "sgraph/cycles.hpp"
#include "sgraph/edgelist.hpp"
#include "sgraph/theorems.hpp"

namespace sgraph {

std::vector<std::pair<int, int>> edge_positions(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(n * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration order must be between 1 and " +
                                std::to_string(kMaxEnumerationOrder));
}

}  // namespace

std::uint64_t underlying_mask_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

namespace {

SignedGraph graph_from_mask(int n, std::uint64_t mask,
                            const std::vector<std::pair<int, int>>& positions) {
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (mask >> i & 1) edges.push_back({positions[i].first, positions[i].second, Sign::Plus});
  return SignedGraph::from_edges(n, std::move(edges));
}

}  // namespace

SignedGraph underlying_from_mask(int n, std::uint64_t mask) {
  check_order(n);
  return graph_from_mask(n, mask, edge_positions(n));
}

void for_each_underlying(int n, bool connected_only,
                         const std::function<void(const SignedGraph&)>& visit) {
  const std::uint64_t total = underlying_mask_count(n);
  const auto positions = edge_positions(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SignedGraph g = graph_from_mask(n, mask, positions);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

std::vector<SignedGraph> enumerate_underlying(int n, bool connected_only) {
  std::vector<SignedGraph> out;
  for_each_underlying(n, connected_only, [&](const SignedGraph& g) { out.push_back(g); });
  return out;
}

void for_each_signing(const SignedGraph& g, bool mod_switching,
                      const std::function<void(const SignedGraph&)>& visit) {
  std::vector<int> free_edges;  // indices whose sign varies
  if (mod_switching) {
    const std::vector<char> forest = spanning_forest_edges(g);
    for (int i = 0; i < g.size(); ++i)
      if (!forest[i]) free_edges.push_back(i);
  } else {
    free_edges.resize(g.size());
    for (int i = 0; i < g.size(); ++i) free_edges[i] = i;
  }
  if (free_edges.size() >= 63) throw std::invalid_argument("too many sign choices to enumerate");

  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::Plus;
  const std::uint64_t total = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free_edges.size(); ++i)
      edges[free_edges[i]].sign = (mask >> i & 1) ? Sign::Minus : Sign::Plus;
    visit(SignedGraph::from_edges(g.order(), edges));
  }
}

std::vector<SignedGraph> enumerate_signings(const SignedGraph& g, bool mod_switching) {
  std::vector<SignedGraph> out;
  for_each_signing(g, mod_switching, [&](const SignedGraph& s) { out.push_back(s); });
  return out;
}

namespace {

struct WorkerAccumulator {
  std::uint64_t graphs = 0;
  std::uint64_t signings = 0;
  std::uint64_t violations = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t lower_optimal = 0;
  std::vector<std::string> counterexamples;
};

void sweep_range(int n, std::uint64_t begin, std::uint64_t end, bool connected_only,
                 bool mod_switching, WorkerAccumulator& acc) {
  const auto positions = edge_positions(n);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const SignedGraph g = graph_from_mask(n, mask, positions);
    if (connected_only && !is_connected(g)) continue;
    ++acc.graphs;
    for_each_signing(g, mod_switching, [&](const SignedGraph& sg) {
      ++acc.signings;
      const OptimalityReport rep = bound_check(sg);
      bool bad = false;
      if (!rep.bound_ok) {
        ++acc.violations;
        bad = true;
      }
      if (rep.lower_optimal_direct != rep.lower_optimal_structural) {
        ++acc.mismatches;
        bad = true;
      }
      if (rep.lower_optimal_direct) ++acc.lower_optimal;
      if (bad) acc.counterexamples.push_back(write_edge_list(sg));
    });
  }
}

}  // namespace

EnumerationSummary verify_up_to(const EnumerationOptions& options) {
  check_order(options.max_order);
  if (options.workers < 1) throw std::invalid_argument("worker count must be positive");

  EnumerationSummary summary;
  summary.max_order = options.max_order;
  summary.connected_only = options.connected_only;
  summary.mod_switching = options.mod_switching;
  summary.lower_optimal_count.assign(options.max_order, 0);

  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= options.max_order; ++n) {
    const std::uint64_t total = underlying_mask_count(n);
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), total));
    const std::uint64_t chunk = (total + workers - 1) / workers;

    std::vector<WorkerAccumulator> accs(workers);
    if (workers == 1) {
      sweep_range(n, 0, total, options.connected_only, options.mod_switching, accs[0]);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = chunk * w;
        const std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, w, begin, end] {
          sweep_range(n, begin, end, options.connected_only, options.mod_switching, accs[w]);
        });
      }
      for (auto& t : threads) t.join();
    }

    // Merge in worker order; ranges are contiguous, so counterexamples land
    // in global bitmask order regardless of the worker count.
    for (const auto& acc : accs) {
      summary.graphs_visited += acc.graphs;
      summary.signings_visited += acc.signings;
      summary.bound_violations += acc.violations;
      summary.equivalence_mismatches += acc.mismatches;
      summary.lower_optimal_count[n - 1] += acc.lower_optimal;
      summary.counterexamples.insert(summary.counterexamples.end(), acc.counterexamples.begin(),
                                     acc.counterexamples.end());
    }
  }
  summary.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return summary;
}

}  // namespace sgraph
