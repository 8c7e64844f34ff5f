#include "sgraph/generator.hpp"

#include <stdexcept>
#include <string>

namespace sgraph {

void validate(const BuildRecipe& recipe) {
  for (int q : recipe.cycle_lengths) {
    if (q < 3) throw std::invalid_argument("cycle length " + std::to_string(q) + " is too short");
    if (q % 2 != 0)
      throw std::invalid_argument("cycle length " + std::to_string(q) +
                                  " is odd; only lengths 0 or 2 mod 4 stay lower-optimal");
  }
  if (recipe.isolated_vertices < 0) throw std::invalid_argument("isolated vertex count is negative");
  if (recipe.expansion_steps < 0) throw std::invalid_argument("expansion step count is negative");
  if (recipe.max_attach < 0) throw std::invalid_argument("attach limit is negative");
}

SignedGraph base_components(const BuildRecipe& recipe) {
  validate(recipe);
  std::vector<SignedGraph> parts;
  for (int q : recipe.cycle_lengths) {
    std::vector<Sign> signs(q, Sign::Plus);
    if (q % 4 == 2) signs[0] = Sign::Minus;  // canonical within the switching class
    parts.push_back(cycle_graph(q, signs));
  }
  if (recipe.isolated_vertices > 0) parts.push_back(SignedGraph::empty(recipe.isolated_vertices));
  return disjoint_union(parts);
}

SignedGraph expand_pendant_pair(const SignedGraph& g, Rng& rng, int max_attach) {
  const auto comps = components(g);
  const int limit = std::min<int>(max_attach, static_cast<int>(comps.size()));
  const int picks = limit > 0 ? rng.below(limit + 1) : 0;

  // choose `picks` distinct components (partial Fisher-Yates)
  std::vector<int> order(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
  for (int i = 0; i < picks; ++i) {
    const int j = i + rng.below(static_cast<int>(order.size()) - i);
    std::swap(order[i], order[j]);
  }

  const int v = g.order();
  const int u = g.order() + 1;
  std::vector<SignedEdge> edges = g.edges();
  for (int i = 0; i < picks; ++i) {
    const auto& comp = comps[order[i]];
    const int anchor = comp.vertices[rng.below(static_cast<int>(comp.vertices.size()))];
    edges.push_back({anchor, v, rng.random_sign()});
  }
  edges.push_back({v, u, rng.random_sign()});
  return SignedGraph::from_edges(g.order() + 2, std::move(edges));
}

SignedGraph generate(const BuildRecipe& recipe) {
  SignedGraph g = base_components(recipe);
  Rng rng(recipe.seed);
  for (int step = 0; step < recipe.expansion_steps; ++step)
    g = expand_pendant_pair(g, rng, recipe.max_attach);
  return g;
}

}  // namespace sgraph
