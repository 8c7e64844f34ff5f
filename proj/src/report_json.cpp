#include "sgraph/report_json.hpp"

#include "sgraph/invariants.hpp"
#include "sgraph/linalg.hpp"

namespace sgraph {

namespace {

const char* witness_kind_name(DisjointWitnessKind kind) {
  switch (kind) {
    case DisjointWitnessKind::NonCycleBlock:
      return "non-cycle-block";
    case DisjointWitnessKind::SharedVertex:
      return "shared-vertex";
    default:
      return "none";
  }
}

}  // namespace

Json structural_witness_to_json(const StructuralWitness& w) {
  Json j;
  j["cycles_disjoint"] = w.cycles_disjoint;
  j["witness_kind"] = witness_kind_name(w.witness_kind);
  j["witness_vertices"] = w.witness.ids();
  j["cycle_condition"] = to_string(w.cycle_condition);
  Json cycles = Json::array();
  for (const auto& v : w.cycle_verdicts) {
    Json c;
    c["vertices"] = v.cycle;
    c["length"] = v.length;
    c["sign"] = std::string(1, to_char(v.sign));
    c["residue_sign_ok"] = v.residue_sign_ok;
    cycles.push_back(std::move(c));
  }
  j["cycles"] = std::move(cycles);
  j["contraction_condition"] = to_string(w.contraction_condition);
  j["alpha_t_g"] = w.alpha_t_g;
  j["alpha_t_g_bracket"] = w.alpha_t_g_bracket;
  j["cyclomatic"] = w.cyclomatic;
  return j;
}

Json report_to_json(const OptimalityReport& r) {
  Json j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["alpha"] = r.alpha;
  j["cyclomatic"] = r.cyclomatic;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["value"] = r.value;
  j["bound_ok"] = r.bound_ok;
  j["lower_optimal_direct"] = r.lower_optimal_direct;
  j["lower_optimal_structural"] = r.lower_optimal_structural;
  j["agreement"] = r.agreement;
  j["structural"] = structural_witness_to_json(r.structural);
  return j;
}

Json summary_to_json(const EnumerationSummary& s) {
  Json j;
  j["max_order"] = s.max_order;
  j["graph_mode"] = s.connected_only ? "labeled-connected" : "labeled-all";
  j["signing_mode"] = s.mod_switching ? "mod-switching" : "all-signings";
  j["graphs_visited"] = s.graphs_visited;
  j["signings_visited"] = s.signings_visited;
  j["bound_violations"] = s.bound_violations;
  j["equivalence_mismatches"] = s.equivalence_mismatches;
  j["lower_optimal_count"] = s.lower_optimal_count;
  j["counterexamples"] = s.counterexamples;
  return j;
}

Json recipe_to_json(const BuildRecipe& r) {
  Json j;
  j["seed"] = r.seed;
  j["cycle_lengths"] = r.cycle_lengths;
  j["isolated_vertices"] = r.isolated_vertices;
  j["expansion_steps"] = r.expansion_steps;
  j["max_attach"] = r.max_attach;
  return j;
}

BuildRecipe recipe_from_json(const Json& j) {
  BuildRecipe r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.cycle_lengths = j.at("cycle_lengths").get<std::vector<int>>();
  r.isolated_vertices = j.at("isolated_vertices").get<int>();
  r.expansion_steps = j.at("expansion_steps").get<int>();
  r.max_attach = j.value("max_attach", 3);
  validate(r);
  return r;
}

Json analyze_to_json(const SignedGraph& g) {
  const OptimalityReport rep = bound_check(g);
  const IndependenceResult mis = independence_number(g);
  Json j;
  j["n"] = rep.n;
  j["edge_count"] = g.size();
  j["rank"] = rep.rank;
  j["nullity"] = rep.n - rep.rank;
  j["alpha"] = rep.alpha;
  j["alpha_witness"] = mis.witness.ids();
  j["matching"] = matching_number(g);
  j["cyclomatic"] = rep.cyclomatic;
  j["components"] = component_count(g);
  j["lower_bound"] = rep.lower_bound;
  j["upper_bound"] = rep.upper_bound;
  j["value"] = rep.value;
  j["bound_ok"] = rep.bound_ok;
  j["lower_optimal_direct"] = rep.lower_optimal_direct;
  j["lower_optimal_structural"] = rep.lower_optimal_structural;
  j["agreement"] = rep.agreement;
  j["structural"] = structural_witness_to_json(rep.structural);
  return j;
}

}  // namespace sgraph
