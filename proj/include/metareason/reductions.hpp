#pragma once

#include <string>
#include <vector>

#include "metareason/disambiguation.hpp"
#include "metareason/evaluation_tree.hpp"
#include "metareason/instances.hpp"

namespace metareason::reductions {

/// One profile per item: worthless until the item's cost is paid, then value
/// accrues linearly until it tops out at the item's value. Budget C + V,
/// target V. Answer-preserving in both directions.
PerformanceProfilesInstance knapsack_to_pp(const KnapsackInstance& source);

/// Gadget making "evaluate tree 1 first" optimal exactly when the knapsack is
/// solvable. Trees: a cheap high-stakes probe, an expensive bundled
/// alternative absorbing the whole budget, a zero-value floor, and one tree
/// per item. Requires at least one item; a target above the total item value
/// is clamped to total + 1 (same answer, keeps probabilities in range).
ActionEvaluationInstance knapsack_to_ae(const KnapsackInstance& source);

/// States: one per universe element plus a goal state rewarded only on full
/// identification. Each subset becomes a deterministic membership query, so
/// identifying the goal state means covering the universe within the bound.
DisambiguationInstance setcover_to_sd(const SetCoverInstance& source);

/// Labels behind the SSAT gadget's states and queries, aligned with the
/// produced instance.
struct SsatGadgetLayout {
  std::vector<std::string> clause_states;  // "c1", "c2", ...
  std::string goal_state;                  // "b"
  std::vector<std::string> matrix_states;  // "v11", "v12", ... (row-major, j >= i)
  std::vector<std::string> query_labels;   // per query: "q12" probes, then "qx1"/"q-x1" pairs
};

struct SsatGadget {
  DisambiguationInstance instance;
  SsatGadgetLayout layout;
};

/// Gadget encoding alternating choice/chance quantification in a query
/// budget. Asking the query for literal x_i (or its negation) plays that
/// choice; nature's uniform answer plays y_i and eliminates exactly the
/// clause states those two selections satisfy. High-utility matrix states
/// force honest play; the target is met exactly when the formula is
/// satisfiable with probability at least 1/2. Supports up to 9 variable
/// pairs (the compact label scheme stops being unambiguous beyond that).
SsatGadget ssat_to_sd(const SsatInstance& source);

}  // namespace metareason::reductions
