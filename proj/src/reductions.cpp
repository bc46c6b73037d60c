#include "metareason/reductions.hpp"

#include <algorithm>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason::reductions {

PerformanceProfilesInstance knapsack_to_pp(const KnapsackInstance& source) {
  std::vector<PiecewiseLinearProfile> profiles;
  profiles.reserve(source.items.size());
  for (const auto& item : source.items) {
    profiles.emplace_back(std::vector<Breakpoint>{
        {Rational(0), Rational(0)},
        {Rational(item.cost), Rational(0)},
        {Rational(item.cost) + Rational(item.value), Rational(item.value)},
    });
  }
  return PerformanceProfilesInstance(std::move(profiles),
                                     Rational(source.capacity) + Rational(source.target),
                                     Rational(source.target));
}

ActionEvaluationInstance knapsack_to_ae(const KnapsackInstance& source) {
  const auto m = static_cast<long>(source.items.size());
  if (m == 0)
    throw DomainError("items: the evaluation gadget needs at least one item");
  const Rational total_value(source.total_value());
  const Rational target =
      std::min(Rational(source.target), total_value + Rational(1));
  const Rational delta = Rational(1) / (Rational(16) * Rational(m) * total_value * total_value);
  const Rational epsilon = Rational(2) * delta * total_value;

  const auto coin = [](const Rational& p, Rational cost) {
    return EvaluationNode::internal(
        std::move(cost), {{p, EvaluationNode::leaf(Rational(1))},
                          {Rational(1) - p, EvaluationNode::leaf(Rational(-1))}});
  };

  std::vector<EvaluationTree> trees;
  trees.reserve(source.items.size() + 3);
  trees.push_back(coin(epsilon, Rational(1)));
  const Rational bundled =
      pow(Rational(1) - epsilon, static_cast<unsigned long>(m)) * (epsilon + delta * target);
  trees.push_back(coin(bundled, Rational(source.capacity) + Rational(1)));
  trees.push_back(EvaluationNode::leaf(Rational(0)));
  for (const auto& item : source.items)
    trees.push_back(coin(delta * Rational(item.value), Rational(item.cost)));

  return ActionEvaluationInstance(std::move(trees), Rational(source.capacity) + Rational(1));
}

namespace {

std::string fresh_goal_label(const std::vector<std::string>& taken) {
  std::string label = "b";
  int suffix = 0;
  while (std::find(taken.begin(), taken.end(), label) != taken.end())
    label = "b" + std::to_string(suffix++);
  return label;
}

}  // namespace

DisambiguationInstance setcover_to_sd(const SetCoverInstance& source) {
  const std::size_t u = source.universe.size();
  std::vector<std::string> states = source.universe;
  states.push_back(fresh_goal_label(source.universe));
  const std::size_t goal = u;

  const auto r = static_cast<long>(u + 1);
  std::vector<Rational> prior(u + 1, Rational(1, r));
  std::vector<Rational> utility(u + 1, Rational(0));
  utility[goal] = Rational(1);

  std::vector<DisambiguationInstance::Query> queries;
  queries.reserve(source.subsets.size());
  for (const auto& subset : source.subsets) {
    std::vector<bool> inside(u + 1, false);
    for (std::size_t idx : subset) inside[idx] = true;
    DisambiguationInstance::Answer outside_answer, inside_answer;
    for (std::size_t s = 0; s <= u; ++s)
      (inside[s] ? inside_answer : outside_answer).push_back(s);
    queries.push_back({std::move(outside_answer), std::move(inside_answer)});
  }

  return DisambiguationInstance(std::move(states), std::move(prior), std::move(utility),
                                std::move(queries), source.bound, Rational(1, r));
}

SsatGadget ssat_to_sd(const SsatInstance& source) {
  const int n = source.variables;
  if (n > 9)
    throw DomainError("variables: the disambiguation gadget supports at most 9 variable pairs");
  const std::size_t clause_count = source.clauses.size();

  SsatGadgetLayout layout;
  std::vector<std::string> states;
  for (std::size_t c = 0; c < clause_count; ++c) {
    layout.clause_states.push_back("c" + std::to_string(c + 1));
    states.push_back(layout.clause_states.back());
  }
  layout.goal_state = "b";
  states.push_back(layout.goal_state);
  const std::size_t goal = clause_count;

  // Matrix states v_ij for 1 <= i <= j <= n, row-major.
  std::vector<std::vector<std::size_t>> matrix_index(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      matrix_index[i][j] = states.size();
      layout.matrix_states.push_back("v" + std::to_string(i) + std::to_string(j));
      states.push_back(layout.matrix_states.back());
    }
  const std::size_t state_count = states.size();

  const auto clauses_with = [&](LiteralKind kind, int index, bool negated) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < clause_count; ++c)
      for (const auto& lit : source.clauses[c])
        if (lit.kind == kind && lit.index == index && lit.negated == negated) {
          out.push_back(c);
          break;
        }
    return out;
  };

  std::vector<DisambiguationInstance::Query> queries;

  // Probe queries: is the true state this particular matrix state?
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const std::size_t v = matrix_index[i][j];
      DisambiguationInstance::Answer rest;
      for (std::size_t s = 0; s < state_count; ++s)
        if (s != v) rest.push_back(s);
      queries.push_back({{v}, std::move(rest)});
      layout.query_labels.push_back("q" + std::to_string(i) + std::to_string(j));
    }

  // Choice queries: asking one plays x_i (or its negation); nature's answer
  // among the last two plays y_i, eliminating exactly the clauses those two
  // literal choices satisfy. Answer order: row i matrix states, every clause
  // state, then the two elimination answers.
  const auto choice_query = [&](int i, bool negated) {
    std::vector<bool> row(state_count, false);
    for (int j = i; j <= n; ++j) row[matrix_index[i][j]] = true;
    DisambiguationInstance::Answer row_answer;
    for (std::size_t s = 0; s < state_count; ++s)
      if (row[s]) row_answer.push_back(s);
    DisambiguationInstance::Answer clause_answer;
    for (std::size_t c = 0; c < clause_count; ++c) clause_answer.push_back(c);
    const auto eliminated = [&](bool chance_negated) {
      std::vector<bool> out(state_count, true);
      for (std::size_t s = 0; s < state_count; ++s)
        if (row[s]) out[s] = false;
      for (std::size_t c : clauses_with(LiteralKind::Choice, i, negated)) out[c] = false;
      for (std::size_t c : clauses_with(LiteralKind::Chance, i, chance_negated)) out[c] = false;
      DisambiguationInstance::Answer answer;
      for (std::size_t s = 0; s < state_count; ++s)
        if (out[s]) answer.push_back(s);
      return answer;
    };
    queries.push_back({std::move(row_answer), std::move(clause_answer), eliminated(false),
                       eliminated(true)});
    layout.query_labels.push_back(std::string("q") + (negated ? "-x" : "x") + std::to_string(i));
  };
  for (int i = 1; i <= n; ++i) {
    choice_query(i, false);
    choice_query(i, true);
  }

  // High utility that dwarfs anything achievable through the goal state.
  mpz_class h = 2;
  for (const auto& query : queries) h *= static_cast<unsigned long>(query.size());

  std::vector<Rational> prior(state_count, Rational(1, static_cast<long>(state_count)));
  std::vector<Rational> utility(state_count, Rational(0));
  utility[goal] = Rational(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) utility[matrix_index[i][j]] = Rational(mpq_class(h));

  const mpz_class matrix_count = mpz_class(n) * (n + 1) / 2;
  const mpz_class target_num = 2 * matrix_count * h + 1;
  const mpz_class target_den = 2 * static_cast<unsigned long>(state_count);
  const Rational target(mpq_class(target_num, target_den));

  DisambiguationInstance instance(std::move(states), std::move(prior), std::move(utility),
                                  std::move(queries), n, target);
  return SsatGadget{std::move(instance), std::move(layout)};
}

}  // namespace metareason::reductions
