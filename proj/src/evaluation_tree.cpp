#include "metareason/evaluation_tree.hpp"

#include <set>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

EvaluationNode EvaluationNode::leaf(Rational value) {
  EvaluationNode n;
  n.payload_ = std::move(value);
  return n;
}

EvaluationNode EvaluationNode::internal(Rational cost, std::vector<Edge> children) {
  if (!cost.is_positive())
    throw ValidationError("cost: evaluation step cost must be positive");
  if (children.empty())
    throw ValidationError("children: internal node needs at least one outcome");
  Rational sum = 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Rational& p = children[i].first;
    if (!p.is_positive() || Rational(1) < p)
      throw ValidationError("children[" + std::to_string(i) +
                            "].probability: must lie in (0, 1]");
    sum += p;
  }
  if (sum != Rational(1))
    throw ValidationError("children: outcome probabilities sum to " + sum.str() +
                          ", expected 1");
  EvaluationNode n;
  n.payload_ = std::move(cost);
  n.children_ = std::move(children);
  return n;
}

const Rational& EvaluationNode::leaf_value() const {
  if (!is_leaf()) throw DomainError("leaf_value called on an internal node");
  return payload_;
}

const Rational& EvaluationNode::step_cost() const {
  if (is_leaf()) throw DomainError("step_cost called on a leaf");
  return payload_;
}

ActionEvaluationInstance::ActionEvaluationInstance(std::vector<EvaluationTree> trees_in,
                                                   Rational budget_in,
                                                   std::vector<std::string> names_in)
    : trees(std::move(trees_in)), budget(std::move(budget_in)), names(std::move(names_in)) {
  if (trees.empty()) throw ValidationError("trees: must not be empty");
  if (budget.is_negative()) throw ValidationError("budget: must be nonnegative");
  if (!names.empty()) {
    if (names.size() != trees.size())
      throw ValidationError("names: must match the number of trees");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty())
        throw ValidationError("names[" + std::to_string(i) + "]: must not be empty");
      if (!seen.insert(names[i]).second)
        throw ValidationError("names[" + std::to_string(i) + "]: duplicate name '" +
                              names[i] + "'");
    }
  }
}

}  // namespace metareason
