#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sgraph/edgelist.hpp"
#include "sgraph/enumerate.hpp"
#include "sgraph/generator.hpp"
#include "sgraph/invariants.hpp"
#include "sgraph/linalg.hpp"
#include "sgraph/report_json.hpp"
#include "sgraph/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

void print_kv(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(26) << key << value << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

int run_analyze(const std::string& path, bool as_json) {
  const sgraph::SignedGraph g = sgraph::read_edge_list_file(path);
  if (as_json) {
    std::cout << sgraph::analyze_to_json(g).dump(2) << "\n";
    return kExitOk;
  }
  const sgraph::OptimalityReport rep = sgraph::bound_check(g);
  const sgraph::IndependenceResult mis = sgraph::independence_number(g);
  print_kv("n", std::to_string(rep.n));
  print_kv("edges", std::to_string(g.size()));
  print_kv("rank", std::to_string(rep.rank));
  print_kv("nullity", std::to_string(rep.n - rep.rank));
  print_kv("alpha", std::to_string(rep.alpha));
  print_kv("alpha_witness", join_ints(mis.witness.ids()));
  print_kv("matching", std::to_string(sgraph::matching_number(g)));
  print_kv("cyclomatic", std::to_string(rep.cyclomatic));
  print_kv("components", std::to_string(sgraph::component_count(g)));
  print_kv("value", std::to_string(rep.value) + "  (rank + 2*alpha)");
  print_kv("bounds", "[" + std::to_string(rep.lower_bound) + ", " + std::to_string(rep.upper_bound) + "]");
  print_kv("bound_ok", yes_no(rep.bound_ok));
  print_kv("lower_optimal_direct", yes_no(rep.lower_optimal_direct));
  print_kv("lower_optimal_structural", yes_no(rep.lower_optimal_structural));
  print_kv("agreement", yes_no(rep.agreement));

  const auto& w = rep.structural;
  print_kv("cycles_disjoint", yes_no(w.cycles_disjoint));
  if (!w.cycles_disjoint) {
    const char* kind = w.witness_kind == sgraph::DisjointWitnessKind::SharedVertex
                           ? "shared vertex"
                           : "non-cycle block";
    print_kv("disjointness_witness", std::string(kind) + ": " + join_ints(w.witness.ids()));
  }
  for (const auto& v : w.cycle_verdicts) {
    std::ostringstream line;
    line << join_ints(v.cycle) << "  length " << v.length << " sign " << sgraph::to_char(v.sign)
         << (v.residue_sign_ok ? "  admissible" : "  inadmissible");
    print_kv("cycle", line.str());
  }
  if (w.contraction_condition != sgraph::CheckStatus::Skipped) {
    std::ostringstream line;
    line << "alpha(T_G)=" << w.alpha_t_g << " alpha([T_G])=" << w.alpha_t_g_bracket
         << " c=" << w.cyclomatic << "  " << sgraph::to_string(w.contraction_condition);
    print_kv("contraction_identity", line.str());
  }
  return kExitOk;
}

int run_rank(const std::string& path) {
  const sgraph::SignedGraph g = sgraph::read_edge_list_file(path);
  const int r = sgraph::rank_exact(sgraph::adjacency_matrix(g));
  std::cout << "rank " << r << "\n" << "nullity " << g.order() - r << "\n";
  return kExitOk;
}

int run_verify(const sgraph::EnumerationOptions& options, bool as_json, const std::string& dump_dir) {
  const sgraph::EnumerationSummary summary = sgraph::verify_up_to(options);
  std::cerr << "elapsed " << summary.elapsed.count() << " ms\n";

  if (!dump_dir.empty() && !summary.counterexamples.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (std::size_t i = 0; i < summary.counterexamples.size(); ++i) {
      std::ostringstream name;
      name << dump_dir << "/counterexample_" << std::setw(4) << std::setfill('0') << i << ".edges";
      std::ofstream out(name.str());
      out << summary.counterexamples[i];
    }
  }

  if (as_json) {
    std::cout << sgraph::summary_to_json(summary).dump(2) << "\n";
  } else {
    print_kv("max_order", std::to_string(summary.max_order));
    print_kv("graph_mode", summary.connected_only ? "labeled-connected" : "labeled-all");
    print_kv("signing_mode", summary.mod_switching ? "mod-switching" : "all-signings");
    print_kv("graphs_visited", std::to_string(summary.graphs_visited));
    print_kv("signings_visited", std::to_string(summary.signings_visited));
    print_kv("bound_violations", std::to_string(summary.bound_violations));
    print_kv("equivalence_mismatches", std::to_string(summary.equivalence_mismatches));
    std::ostringstream counts;
    for (std::size_t i = 0; i < summary.lower_optimal_count.size(); ++i)
      counts << (i ? " " : "") << summary.lower_optimal_count[i];
    print_kv("lower_optimal_count", counts.str());
    print_kv("counterexamples", std::to_string(summary.counterexamples.size()));
  }
  return summary.clean() ? kExitOk : kExitCounterexample;
}

int run_generate(sgraph::BuildRecipe recipe, const std::string& recipe_path, int count,
                 const std::string& out_dir) {
  if (!recipe_path.empty()) {
    std::ifstream in(recipe_path);
    if (!in) throw std::runtime_error("cannot open " + recipe_path);
    sgraph::Json j = sgraph::Json::parse(in);
    recipe = sgraph::recipe_from_json(j);
  }
  sgraph::validate(recipe);
  if (count < 1) throw std::invalid_argument("count must be positive");

  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    sgraph::BuildRecipe r = recipe;
    r.seed = recipe.seed + static_cast<std::uint64_t>(i);
    const sgraph::SignedGraph g = sgraph::generate(r);
    // every emitted graph is re-verified with both deciders before writing
    if (!sgraph::is_lower_optimal_direct(g) ||
        !sgraph::is_lower_optimal_structural(g).lower_optimal) {
      std::cerr << "generated graph failed re-verification (seed " << r.seed << ")\n";
      return kExitCounterexample;
    }
    std::ostringstream name;
    name << out_dir << "/graph_" << std::setw(4) << std::setfill('0') << i << ".edges";
    sgraph::write_edge_list_file(g, name.str());
  }
  std::ofstream recipe_out(out_dir + "/recipe.json");
  recipe_out << sgraph::recipe_to_json(recipe).dump(2) << "\n";
  std::cout << "wrote " << count << " graph(s) to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signed-graph toolkit: adjacency rank, independence and cycle structure, "
               "and lower-optimality analysis"};
  app.require_subcommand(1);

  std::string analyze_path;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Full report for one edge-list file");
  analyze->add_option("path", analyze_path, "signed edge-list file")->required();
  analyze->add_flag("--json", analyze_json, "emit JSON");

  std::string rank_path;
  auto* rank = app.add_subcommand("rank", "Exact rank and nullity of one edge-list file");
  rank->add_option("path", rank_path, "signed edge-list file")->required();

  sgraph::EnumerationOptions options;
  bool verify_json = false;
  std::string dump_dir;
  auto* verify = app.add_subcommand("verify", "Exhaustive sweep over all signed graphs up to a bound");
  verify->add_option("--max-order", options.max_order, "largest vertex count to sweep")
      ->required()
      ->check(CLI::Range(1, sgraph::kMaxEnumerationOrder));
  verify->add_flag("--connected-only", options.connected_only, "only connected underlying graphs");
  verify->add_flag("--mod-switching", options.mod_switching,
                   "one signing per switching class instead of all signings");
  verify->add_option("--jobs", options.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", verify_json, "emit JSON");
  verify->add_option("--dump-dir", dump_dir, "write counterexamples as edge-list files here");

  sgraph::BuildRecipe recipe;
  std::string recipe_path, out_dir = ".";
  int count = 1;
  auto* generate = app.add_subcommand("generate", "Emit lower-optimal graphs built from a recipe");
  generate->add_option("--recipe", recipe_path, "recipe JSON file (overrides inline flags)");
  generate->add_option("--cycles", recipe.cycle_lengths, "base cycle lengths (even, >= 4)");
  generate->add_option("--isolated", recipe.isolated_vertices, "isolated base vertices");
  generate->add_option("--steps", recipe.expansion_steps, "pendant-pair expansion steps");
  generate->add_option("--max-attach", recipe.max_attach, "components an expansion may touch");
  generate->add_option("--seed", recipe.seed, "base seed (file i uses seed + i)");
  generate->add_option("--count", count, "number of graphs to emit");
  generate->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
    if (*analyze) return run_analyze(analyze_path, analyze_json);
    if (*rank) return run_rank(rank_path);
    if (*verify) return run_verify(options, verify_json, dump_dir);
    if (*generate) return run_generate(recipe, recipe_path, count, out_dir);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const sgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
