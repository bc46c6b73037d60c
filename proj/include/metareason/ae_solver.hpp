#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metareason/evaluation_tree.hpp"
#include "metareason/rational.hpp"

namespace metareason::ae {

/// Deterministic conditional plan: either stop, or evaluate one tree a step
/// further and branch on its outcome. `outcomes` lines up with the evaluated
/// node's edge order.
struct AePolicy {
  std::optional<std::size_t> evaluate;  // nullopt = stop and take the best action
  std::vector<AePolicy> outcomes;
};

/// Expected subtree value for every node of one tree, indexed in preorder
/// (root first, then each child's subtree in edge order). Leaves carry their
/// own value; an internal node carries the probability-weighted mean of its
/// children, so the root is the action's a-priori expected value.
std::vector<Rational> propagate_values(const EvaluationTree& tree);

struct SolveResult {
  Rational value;
  AePolicy policy;
};

/// Memoized expectimax over (current node per tree, remaining budget).
/// Stopping yields the best current propagated value across all trees;
/// evaluating tree i is allowed while its node is internal and the step cost
/// fits the remaining budget. Policy ties prefer stopping, then the lowest
/// tree index.
SolveResult optimal_policy_value(const ActionEvaluationInstance& instance);

/// Best achievable value when the first step evaluates tree i; nullopt when
/// tree i cannot be evaluated first (leaf root or unaffordable cost).
std::vector<std::optional<Rational>> first_step_values(const ActionEvaluationInstance& instance);

/// Trees whose evaluation can begin some optimal policy, in increasing index
/// order. Empty when stopping immediately strictly beats every first step.
std::vector<std::size_t> first_step_optimal_set(const ActionEvaluationInstance& instance);

/// Is evaluating `tree` first optimal? Throws DomainError on a bad index.
bool decide_first_action(const ActionEvaluationInstance& instance, std::size_t tree);

}  // namespace metareason::ae
