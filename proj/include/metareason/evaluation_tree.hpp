#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metareason/rational.hpp"

namespace metareason {

/// Node of a stochastic evaluation tree. A leaf carries the action's value as
/// estimated after all modeled evaluation steps; an internal node carries the
/// positive cost of performing one more evaluation step plus the probabilistic
/// outcomes of that step. Edge probabilities are in (0, 1] and sum to exactly 1.
class EvaluationNode {
 public:
  using Edge = std::pair<Rational, EvaluationNode>;  // (probability, subtree)

  static EvaluationNode leaf(Rational value);
  static EvaluationNode internal(Rational cost, std::vector<Edge> children);

  bool is_leaf() const { return children_.empty(); }
  /// Leaf only; throws DomainError otherwise.
  const Rational& leaf_value() const;
  /// Internal only; throws DomainError otherwise.
  const Rational& step_cost() const;
  const std::vector<Edge>& children() const { return children_; }

  friend bool operator==(const EvaluationNode&, const EvaluationNode&) = default;

 private:
  EvaluationNode() = default;
  Rational payload_;  // leaf value, or step cost for internal nodes
  std::vector<Edge> children_;
};

using EvaluationTree = EvaluationNode;

/// A bundle of independent evaluation trees sharing one deliberation budget.
/// The agent repeatedly either evaluates some tree one step further (paying
/// that node's cost) or stops and takes the best-looking action.
struct ActionEvaluationInstance {
  std::vector<EvaluationTree> trees;
  Rational budget;                  // N >= 0
  std::vector<std::string> names;   // optional labels; empty or one per tree

  ActionEvaluationInstance(std::vector<EvaluationTree> trees, Rational budget,
                           std::vector<std::string> names = {});

  friend bool operator==(const ActionEvaluationInstance&,
                         const ActionEvaluationInstance&) = default;
};

}  // namespace metareason
