#include "metareason/ae_solver.hpp"

#include <map>
#include <string>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason::ae {

namespace {

struct FlatNode {
  bool leaf = true;
  Rational cost;                                     // internal nodes only
  Rational propagated;                               // expected value of the subtree
  std::vector<std::pair<Rational, std::size_t>> edges;  // (probability, child id)
};

struct FlatTree {
  std::vector<FlatNode> nodes;  // preorder, root at 0
};

std::size_t flatten_into(const EvaluationNode& node, FlatTree& tree) {
  const std::size_t id = tree.nodes.size();
  tree.nodes.emplace_back();
  if (node.is_leaf()) {
    tree.nodes[id].propagated = node.leaf_value();
    return id;
  }
  tree.nodes[id].leaf = false;
  tree.nodes[id].cost = node.step_cost();
  for (const auto& [p, child] : node.children()) {
    const std::size_t child_id = flatten_into(child, tree);
    tree.nodes[id].edges.emplace_back(p, child_id);
  }
  Rational expected = 0;
  for (const auto& [p, child_id] : tree.nodes[id].edges)
    expected += p * tree.nodes[child_id].propagated;
  tree.nodes[id].propagated = std::move(expected);
  return id;
}

FlatTree flatten(const EvaluationTree& tree) {
  FlatTree flat;
  flatten_into(tree, flat);
  return flat;
}

class Solver {
 public:
  explicit Solver(const ActionEvaluationInstance& instance) {
    flat_.reserve(instance.trees.size());
    for (const auto& tree : instance.trees) flat_.push_back(flatten(tree));
  }

  Rational stop_value(const std::vector<std::size_t>& pos) const {
    Rational best = flat_[0].nodes[pos[0]].propagated;
    for (std::size_t i = 1; i < flat_.size(); ++i) {
      const Rational& v = flat_[i].nodes[pos[i]].propagated;
      if (best < v) best = v;
    }
    return best;
  }

  Rational value(std::vector<std::size_t>& pos, const Rational& budget) {
    const auto key = std::make_pair(pos, budget);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational best = stop_value(pos);
    for (std::size_t i = 0; i < flat_.size(); ++i)
      if (const auto v = step_value(pos, budget, i); v && best < *v) best = *v;
    memo_.emplace(key, best);
    return best;
  }

  // Expected value of evaluating tree i now and continuing optimally; nullopt
  // when tree i is at a leaf or its step cost exceeds the remaining budget.
  std::optional<Rational> step_value(std::vector<std::size_t>& pos, const Rational& budget,
                                     std::size_t i) {
    const FlatNode& node = flat_[i].nodes[pos[i]];
    if (node.leaf || budget < node.cost) return std::nullopt;
    const Rational rest = budget - node.cost;
    Rational sum = 0;
    const std::size_t here = pos[i];
    for (const auto& [p, child_id] : node.edges) {
      pos[i] = child_id;
      sum += p * value(pos, rest);
    }
    pos[i] = here;
    return sum;
  }

  AePolicy policy(std::vector<std::size_t>& pos, const Rational& budget) {
    const Rational best = value(pos, budget);
    AePolicy plan;
    if (stop_value(pos) == best) return plan;  // ties prefer stopping
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      const auto v = step_value(pos, budget, i);
      if (!v || *v != best) continue;
      plan.evaluate = i;
      const FlatNode& node = flat_[i].nodes[pos[i]];
      const Rational rest = budget - node.cost;
      const std::size_t here = pos[i];
      for (const auto& [p, child_id] : node.edges) {
        pos[i] = child_id;
        plan.outcomes.push_back(policy(pos, rest));
      }
      pos[i] = here;
      return plan;
    }
    throw Error("no action matches the computed optimum");  // unreachable
  }

  std::vector<std::size_t> root_positions() const {
    return std::vector<std::size_t>(flat_.size(), 0);
  }

 private:
  std::vector<FlatTree> flat_;
  std::map<std::pair<std::vector<std::size_t>, Rational>, Rational> memo_;
};

}  // namespace

std::vector<Rational> propagate_values(const EvaluationTree& tree) {
  const FlatTree flat = flatten(tree);
  std::vector<Rational> values;
  values.reserve(flat.nodes.size());
  for (const auto& node : flat.nodes) values.push_back(node.propagated);
  return values;
}

SolveResult optimal_policy_value(const ActionEvaluationInstance& instance) {
  Solver solver(instance);
  auto pos = solver.root_positions();
  SolveResult result;
  result.value = solver.value(pos, instance.budget);
  result.policy = solver.policy(pos, instance.budget);
  return result;
}

std::vector<std::optional<Rational>> first_step_values(const ActionEvaluationInstance& instance) {
  Solver solver(instance);
  auto pos = solver.root_positions();
  std::vector<std::optional<Rational>> values(instance.trees.size());
  for (std::size_t i = 0; i < instance.trees.size(); ++i)
    values[i] = solver.step_value(pos, instance.budget, i);
  return values;
}

std::vector<std::size_t> first_step_optimal_set(const ActionEvaluationInstance& instance) {
  Solver solver(instance);
  auto pos = solver.root_positions();
  const Rational best = solver.value(pos, instance.budget);
  std::vector<std::size_t> set;
  for (std::size_t i = 0; i < instance.trees.size(); ++i)
    if (const auto v = solver.step_value(pos, instance.budget, i); v && *v == best)
      set.push_back(i);
  return set;
}

bool decide_first_action(const ActionEvaluationInstance& instance, std::size_t tree) {
  if (tree >= instance.trees.size())
    throw DomainError("tree index " + std::to_string(tree) + " out of range; instance has " +
                      std::to_string(instance.trees.size()) + " trees");
  Solver solver(instance);
  auto pos = solver.root_positions();
  const Rational best = solver.value(pos, instance.budget);
  const auto v = solver.step_value(pos, instance.budget, tree);
  return v && *v == best;
}

}  // namespace metareason::ae
