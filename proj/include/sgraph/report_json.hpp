#pragma once

#include <nlohmann/json.hpp>

#include "sgraph/enumerate.hpp"
#include "sgraph/generator.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/theorems.hpp"

namespace sgraph {

/// All reports serialize with stable snake_case field names, counts as
/// integers and verdicts as booleans. No field is ever a floating-point
/// value, and elapsed time is deliberately left out so summaries are
/// byte-identical across runs and worker counts.
using Json = nlohmann::ordered_json;

Json structural_witness_to_json(const StructuralWitness& w);
Json report_to_json(const OptimalityReport& report);
Json summary_to_json(const EnumerationSummary& summary);

Json recipe_to_json(const BuildRecipe& recipe);
BuildRecipe recipe_from_json(const Json& j);

/// The full analysis document for one graph: the optimality report plus the
/// matching number, component count and independence witness.
Json analyze_to_json(const SignedGraph& g);

}  // namespace sgraph
