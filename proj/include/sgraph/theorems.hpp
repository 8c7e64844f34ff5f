#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgraph/cycles.hpp"
#include "sgraph/graph.hpp"

namespace sgraph {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

/// One cycle's verdict for the residue/sign condition: admissible means
/// length 0 mod 4 with a positive sign, or length 2 mod 4 with a negative one.
struct CycleVerdict {
  Cycle cycle;
  int length = 0;
  Sign sign = Sign::Plus;
  bool residue_sign_ok = false;
};

bool cycle_residue_sign_ok(int length, Sign sign);

/// Evidence behind the structural lower-optimality verdict, one entry per
/// condition: (a) cycles pairwise vertex-disjoint, (b) every cycle residue/
/// sign-admissible, (c) alpha(T_G) = alpha([T_G]) + c(G). When (a) fails the
/// other two are left unevaluated.
struct StructuralWitness {
  bool cycles_disjoint = false;
  DisjointWitnessKind witness_kind = DisjointWitnessKind::None;
  VertexSet witness;

  CheckStatus cycle_condition = CheckStatus::Skipped;
  std::vector<CycleVerdict> cycle_verdicts;

  CheckStatus contraction_condition = CheckStatus::Skipped;
  int alpha_t_g = -1;
  int alpha_t_g_bracket = -1;
  int cyclomatic = -1;
};

/// All computed quantities of one graph against the rank/independence bound
/// chain 2n - 2c <= r + 2*alpha <= 2n, plus both lower-optimality verdicts.
/// Everything is an exact integer; there is no tolerance anywhere.
struct OptimalityReport {
  int n = 0;
  int rank = 0;
  int alpha = 0;
  int cyclomatic = 0;
  int lower_bound = 0;  // 2n - 2c
  int upper_bound = 0;  // 2n
  int value = 0;        // r + 2*alpha
  bool bound_ok = false;
  bool lower_optimal_direct = false;
  bool lower_optimal_structural = false;
  bool agreement = false;
  StructuralWitness structural;
};

/// Computes r, alpha and c exactly and reports where r + 2*alpha sits inside
/// [2n - 2c, 2n], together with both lower-optimality verdicts. Reports only;
/// nothing is asserted.
OptimalityReport bound_check(const SignedGraph& g);

/// True iff r + 2*alpha = 2n - 2c, decided by direct exact computation.
bool is_lower_optimal_direct(const SignedGraph& g);

struct StructuralResult {
  bool lower_optimal = false;
  StructuralWitness witness;
};

/// Decides lower-optimality from structure alone: disjoint cycles, admissible
/// cycle residues/signs, and the contraction identity on independence numbers.
StructuralResult is_lower_optimal_structural(const SignedGraph& g);

/// The two deciders must agree on every signed graph.
bool check_equivalence(const SignedGraph& g);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Instantiates every applicable rank/independence/cyclomatic identity on g
/// (over all valid vertex and edge choices; induced subgraphs are sampled)
/// and verifies each one. Inapplicable identities are reported as skipped,
/// never as vacuous passes.
std::vector<CheckResult> lemma_suite(const SignedGraph& g, std::uint64_t seed = 0);

/// Consequences of deleting a cycle vertex u from a lower-optimal graph:
/// rank and alpha are preserved, the cyclomatic number drops by one, the
/// deleted graph stays lower-optimal, and u lies on exactly one cycle without
/// being quasi-pendant. Skipped when g is not lower-optimal or has no cycle.
std::vector<CheckResult> corollary_suite(const SignedGraph& g);

}  // namespace sgraph
