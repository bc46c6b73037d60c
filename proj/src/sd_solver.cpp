#include "metareason/sd_solver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason::sd {

std::vector<std::size_t> KnowledgeState::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i].is_positive()) s.push_back(i);
  return s;
}

Rational KnowledgeState::total() const {
  Rational t = 0;
  for (const auto& w : weights) t += w;
  return t;
}

namespace {

void check_query(const DisambiguationInstance& inst, std::size_t query) {
  if (query >= inst.queries.size())
    throw DomainError("query index " + std::to_string(query) + " out of range");
}

// How many answer positions of each query contain each state. The union
// invariant guarantees every count is at least 1.
std::vector<std::vector<int>> consistency_counts(const DisambiguationInstance& inst) {
  std::vector<std::vector<int>> counts(inst.queries.size(),
                                       std::vector<int>(inst.state_count(), 0));
  for (std::size_t q = 0; q < inst.queries.size(); ++q)
    for (const auto& answer : inst.queries[q])
      for (std::size_t state : answer) ++counts[q][state];
  return counts;
}

class Solver {
 public:
  Solver(const DisambiguationInstance& inst, AnswerModel model)
      : inst_(inst), model_(model), counts_(consistency_counts(inst)) {
    if (inst.queries.size() > 64)
      throw Error("more than 64 queries per instance is unsupported");
  }

  Rational value(const KnowledgeState& k, std::int64_t n, std::uint64_t asked) {
    bool all_zero = true;
    for (const auto& w : k.weights)
      if (!w.is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) return Rational(0);
    if (n == 0) return terminal_utility(inst_, k);
    const auto key = std::make_tuple(k.weights, k.consistent, asked, n);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Rational> best;
    for (std::size_t q = 0; q < inst_.queries.size(); ++q) {
      if (skip_query(q, asked)) continue;
      const Rational v = ask_value(k, n, asked, q);
      if (!best || *best < v) best = v;
    }
    // No query left to ask (or none defined): the remaining budget is idle.
    const Rational result = best ? *best : terminal_utility(inst_, k);
    memo_.emplace(key, result);
    return result;
  }

  Rational ask_value(const KnowledgeState& k, std::int64_t n, std::uint64_t asked,
                     std::size_t q) {
    const std::uint64_t asked_next =
        model_ == AnswerModel::Persistent ? asked | (std::uint64_t{1} << q) : asked;
    Rational sum = 0;
    for (std::size_t a = 0; a < inst_.queries[q].size(); ++a) {
      const KnowledgeState next = refined(k, q, a);
      bool reachable = false;
      for (const auto& w : next.weights)
        if (!w.is_zero()) {
          reachable = true;
          break;
        }
      if (reachable) sum += value(next, n - 1, asked_next);
    }
    return sum;
  }

  SdPolicy policy(const KnowledgeState& k, std::int64_t n, std::uint64_t asked) {
    SdPolicy plan;
    const Rational best = value(k, n, asked);
    if (n == 0 || terminal_utility(inst_, k) == best) return plan;  // stop wins ties
    for (std::size_t q = 0; q < inst_.queries.size(); ++q) {
      if (skip_query(q, asked)) continue;
      if (ask_value(k, n, asked, q) != best) continue;
      plan.query = q;
      const std::uint64_t asked_next =
          model_ == AnswerModel::Persistent ? asked | (std::uint64_t{1} << q) : asked;
      for (std::size_t a = 0; a < inst_.queries[q].size(); ++a) {
        const KnowledgeState next = refined(k, q, a);
        if (next.support().empty()) continue;  // answer cannot arrive
        plan.on_answer.emplace_back(a, policy(next, n - 1, asked_next));
      }
      return plan;
    }
    throw Error("no query matches the computed optimum");  // unreachable
  }

 private:
  bool skip_query(std::size_t q, std::uint64_t asked) const {
    return model_ == AnswerModel::Persistent && (asked & (std::uint64_t{1} << q)) != 0;
  }

  KnowledgeState refined(const KnowledgeState& k, std::size_t q, std::size_t a) const {
    KnowledgeState next;
    next.weights.assign(inst_.state_count(), Rational(0));
    next.consistent.assign(inst_.state_count(), false);
    for (std::size_t state : inst_.queries[q][a]) {
      next.weights[state] = k.weights[state] / Rational(counts_[q][state]);
      next.consistent[state] = k.consistent[state];
    }
    return next;
  }

  const DisambiguationInstance& inst_;
  AnswerModel model_;
  std::vector<std::vector<int>> counts_;
  std::map<std::tuple<std::vector<Rational>, std::vector<bool>, std::uint64_t, std::int64_t>,
           Rational>
      memo_;
};

}  // namespace

KnowledgeState initial_knowledge(const DisambiguationInstance& instance) {
  return KnowledgeState{instance.prior,
                        std::vector<bool>(instance.state_count(), true)};
}

std::vector<Rational> answer_distribution(const DisambiguationInstance& instance,
                                          std::size_t query, std::size_t state) {
  check_query(instance, query);
  if (state >= instance.state_count())
    throw DomainError("state index " + std::to_string(state) + " out of range");
  const auto& answers = instance.queries[query];
  int n = 0;
  for (const auto& answer : answers)
    for (std::size_t s : answer)
      if (s == state) ++n;
  std::vector<Rational> dist(answers.size(), Rational(0));
  for (std::size_t a = 0; a < answers.size(); ++a)
    for (std::size_t s : answers[a])
      if (s == state) dist[a] = Rational(1, n);
  return dist;
}

KnowledgeState refine(const DisambiguationInstance& instance, const KnowledgeState& k,
                      std::size_t query, std::size_t answer) {
  check_query(instance, query);
  if (answer >= instance.queries[query].size())
    throw DomainError("answer index " + std::to_string(answer) + " out of range");
  if (k.weights.size() != instance.state_count() ||
      k.consistent.size() != instance.state_count())
    throw DomainError("knowledge state arity mismatch");
  const auto counts = consistency_counts(instance);
  KnowledgeState next;
  next.weights.assign(instance.state_count(), Rational(0));
  next.consistent.assign(instance.state_count(), false);
  for (std::size_t state : instance.queries[query][answer]) {
    next.weights[state] = k.weights[state] / Rational(counts[query][state]);
    next.consistent[state] = k.consistent[state];
  }
  return next;
}

Rational terminal_utility(const DisambiguationInstance& instance, const KnowledgeState& k) {
  if (k.weights.size() != instance.state_count() ||
      k.consistent.size() != instance.state_count())
    throw DomainError("knowledge state arity mismatch");
  for (const auto& w : k.weights)
    if (w.is_negative()) throw DomainError("knowledge state has a negative weight");
  std::optional<std::size_t> only;
  for (std::size_t i = 0; i < k.consistent.size(); ++i) {
    if (!k.consistent[i]) continue;
    if (only) return Rational(0);  // still ambiguous
    only = i;
  }
  if (!only) return Rational(0);
  return k.weights[*only] * instance.utility[*only];
}

SolveResult optimal_expected_utility(const DisambiguationInstance& instance, AnswerModel model) {
  Solver solver(instance, model);
  const KnowledgeState k = initial_knowledge(instance);
  SolveResult result;
  result.value = solver.value(k, instance.budget, 0);
  result.policy = solver.policy(k, instance.budget, 0);
  return result;
}

std::vector<Rational> first_query_values(const DisambiguationInstance& instance,
                                         AnswerModel model) {
  Solver solver(instance, model);
  const KnowledgeState k = initial_knowledge(instance);
  std::vector<Rational> values;
  values.reserve(instance.queries.size());
  if (instance.budget < 1) return values;
  for (std::size_t q = 0; q < instance.queries.size(); ++q)
    values.push_back(solver.ask_value(k, instance.budget, 0, q));
  return values;
}

bool decide(const DisambiguationInstance& instance, AnswerModel model) {
  Solver solver(instance, model);
  const KnowledgeState k = initial_knowledge(instance);
  return !(solver.value(k, instance.budget, 0) < instance.target);
}

DisambiguationInstance to_uniform_prior(const DisambiguationInstance& instance) {
  const auto r = static_cast<long>(instance.state_count());
  std::vector<Rational> prior(instance.state_count(), Rational(1, r));
  std::vector<Rational> utility;
  utility.reserve(instance.state_count());
  for (std::size_t i = 0; i < instance.state_count(); ++i)
    utility.push_back(Rational(r) * instance.prior[i] * instance.utility[i]);
  return DisambiguationInstance(instance.states, std::move(prior), std::move(utility),
                                instance.queries, instance.budget, instance.target);
}

DisambiguationInstance to_constant_utility(const DisambiguationInstance& instance) {
  Rational mass = 0;
  for (std::size_t i = 0; i < instance.state_count(); ++i)
    mass += instance.prior[i] * instance.utility[i];
  if (mass.is_zero())
    throw DomainError("cannot normalize utilities: every state has prior * utility = 0");
  std::vector<Rational> prior;
  prior.reserve(instance.state_count());
  for (std::size_t i = 0; i < instance.state_count(); ++i)
    prior.push_back(instance.prior[i] * instance.utility[i] / mass);
  std::vector<Rational> utility(instance.state_count(), Rational(1));
  return DisambiguationInstance(instance.states, std::move(prior), std::move(utility),
                                instance.queries, instance.budget, instance.target / mass);
}

}  // namespace metareason::sd
