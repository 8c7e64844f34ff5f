#include "sgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgraph {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  for (int v : ids_)
    if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
  std::ranges::sort(ids_);
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
  return std::ranges::binary_search(ids_, v);
}

SignedGraph SignedGraph::empty(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  SignedGraph g;
  g.n_ = n;
  g.adj_.resize(n);
  return g;
}

SignedGraph SignedGraph::from_edges(int n, std::vector<SignedEdge> edges) {
  SignedGraph g = empty(n);
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
  }
  std::ranges::sort(edges, {}, [](const SignedEdge& e) { return std::pair(e.u, e.v); });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw std::invalid_argument("parallel edges are not allowed");
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void SignedGraph::build_adjacency() {
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.sign);
    adj_[e.v].emplace_back(e.u, e.sign);
  }
  for (auto& nb : adj_)
    std::ranges::sort(nb, {}, [](const std::pair<int, Sign>& p) { return p.first; });
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

const std::vector<std::pair<int, Sign>>& SignedGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int SignedGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool SignedGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  auto it = std::ranges::lower_bound(nb, v, {}, [](const std::pair<int, Sign>& p) { return p.first; });
  return it != nb.end() && it->first == v;
}

Sign SignedGraph::edge_sign(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  auto it = std::ranges::lower_bound(nb, v, {}, [](const std::pair<int, Sign>& p) { return p.first; });
  if (it == nb.end() || it->first != v)
    throw std::invalid_argument("no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  return it->second;
}

DeletedGraph delete_vertices(const SignedGraph& g, const VertexSet& xs) {
  for (int v : xs)
    if (v >= g.order()) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");

  DeletedGraph out;
  out.old_to_new.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (xs.contains(v)) continue;
    out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }

  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) {
    int u = out.old_to_new[e.u];
    int v = out.old_to_new[e.v];
    if (u >= 0 && v >= 0) edges.push_back({u, v, e.sign});
  }
  out.graph = SignedGraph::from_edges(static_cast<int>(out.new_to_old.size()), std::move(edges));
  return out;
}

SignedGraph delete_edge(const SignedGraph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  g.edge_sign(u, v);  // throws if absent
  std::vector<SignedEdge> edges;
  edges.reserve(g.size() - 1);
  for (const auto& e : g.edges())
    if (!(e.u == u && e.v == v)) edges.push_back(e);
  return SignedGraph::from_edges(g.order(), std::move(edges));
}

namespace {

std::vector<int> component_labels(const SignedGraph& g, int& count) {
  std::vector<int> label(g.order(), -1);
  count = 0;
  std::vector<int> stack;
  for (int root = 0; root < g.order(); ++root) {
    if (label[root] >= 0) continue;
    int id = count++;
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [w, s] : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

}  // namespace

std::vector<Component> components(const SignedGraph& g) {
  int count = 0;
  std::vector<int> label = component_labels(g, count);

  std::vector<Component> out(count);
  std::vector<int> local(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    auto& comp = out[label[v]];
    local[v] = static_cast<int>(comp.vertices.size());
    comp.vertices.push_back(v);
  }
  std::vector<std::vector<SignedEdge>> edges(count);
  for (const auto& e : g.edges())
    edges[label[e.u]].push_back({local[e.u], local[e.v], e.sign});
  for (int c = 0; c < count; ++c)
    out[c].graph = SignedGraph::from_edges(static_cast<int>(out[c].vertices.size()), std::move(edges[c]));
  return out;
}

int component_count(const SignedGraph& g) {
  int count = 0;
  component_labels(g, count);
  return count;
}

bool is_connected(const SignedGraph& g) { return component_count(g) == 1; }

VertexSet pendant_vertices(const SignedGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet quasi_pendant_vertices(const SignedGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) continue;
    for (const auto& [w, s] : g.neighbors(v)) {
      if (g.degree(w) == 1) {
        out.push_back(v);
        break;
      }
    }
  }
  return VertexSet(std::move(out));
}

SignedGraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Sign::Plus});
  return SignedGraph::from_edges(n, std::move(edges));
}

SignedGraph cycle_graph(int n) { return cycle_graph(n, std::vector<Sign>(n, Sign::Plus)); }

SignedGraph cycle_graph(int n, const std::vector<Sign>& signs) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (static_cast<int>(signs.size()) != n)
    throw std::invalid_argument("cycle needs one sign per edge");
  std::vector<SignedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, signs[i]});
  return SignedGraph::from_edges(n, std::move(edges));
}

SignedGraph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  std::vector<SignedEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i, Sign::Plus});
  return SignedGraph::from_edges(n, std::move(edges));
}

SignedGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Plus});
  return SignedGraph::from_edges(n, std::move(edges));
}

SignedGraph disjoint_union(std::span<const SignedGraph> parts) {
  int n = 0;
  std::vector<SignedEdge> edges;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) edges.push_back({e.u + n, e.v + n, e.sign});
    n += part.order();
  }
  return SignedGraph::from_edges(n, std::move(edges));
}

SignedGraph underlying(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::Plus;
  return SignedGraph::from_edges(g.order(), std::move(edges));
}

}  // namespace sgraph
