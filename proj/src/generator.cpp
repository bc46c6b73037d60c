#include "metareason/generator.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "metareason/errors.hpp"

namespace metareason::gen {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty draw range");
  const std::uint64_t limit = bound * (~std::uint64_t(0) / bound);
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return draw % bound;
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("empty draw range");
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix64::coin() { return next() >> 63; }

namespace {

int at_least(int floor_value, int requested) { return std::max(floor_value, requested); }

KnapsackInstance random_knapsack(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto m = rng.range(1, at_least(1, cfg.size));
  const auto entry_cap = at_least(1, cfg.width);
  std::vector<KnapsackItem> items;
  items.reserve(static_cast<std::size_t>(m));
  std::int64_t total_cost = 0, total_value = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    items.push_back({rng.range(1, entry_cap), rng.range(1, entry_cap)});
    total_cost += items.back().cost;
    total_value += items.back().value;
  }
  const auto capacity = rng.range(1, total_cost);
  const auto target = rng.range(1, total_value + 1);
  return KnapsackInstance(std::move(items), capacity, target);
}

SetCoverInstance random_setcover(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto u = rng.range(1, at_least(1, cfg.size));
  std::vector<std::string> universe;
  for (std::int64_t i = 1; i <= u; ++i) universe.push_back("e" + std::to_string(i));
  const auto t = rng.range(1, at_least(1, cfg.width));
  std::vector<std::vector<std::size_t>> subsets(static_cast<std::size_t>(t));
  for (auto& subset : subsets)
    for (std::int64_t e = 0; e < u; ++e)
      if (rng.coin()) subset.push_back(static_cast<std::size_t>(e));
  const auto bound = rng.range(1, at_least(1, cfg.bound));
  return SetCoverInstance(std::move(universe), std::move(subsets), bound);
}

SsatInstance random_ssat(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto n = rng.range(1, at_least(1, cfg.size));
  const auto k = rng.range(0, at_least(0, cfg.width));
  std::vector<std::vector<SsatLiteral>> clauses;
  for (std::int64_t c = 0; c < k; ++c) {
    const auto len = rng.range(1, std::min<std::int64_t>(3, 2 * n));
    std::set<SsatLiteral> clause;
    while (std::ssize(clause) < len)
      clause.insert({rng.coin() ? LiteralKind::Choice : LiteralKind::Chance,
                     static_cast<int>(rng.range(1, n)), rng.coin()});
    clauses.emplace_back(clause.begin(), clause.end());
  }
  return SsatInstance(static_cast<int>(n), std::move(clauses));
}

PerformanceProfilesInstance random_profiles(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto count = rng.range(1, at_least(1, cfg.size));
  const auto quarter = [&](std::int64_t lo, std::int64_t hi) {
    return Rational(rng.range(lo, hi), 4);
  };
  std::vector<PiecewiseLinearProfile> profiles;
  Rational total_final(0);
  for (std::int64_t p = 0; p < count; ++p) {
    const auto segments = rng.range(1, at_least(1, cfg.width));
    std::vector<std::pair<Rational, Rational>> deltas;  // (time, value) increments
    for (std::int64_t s = 0; s < segments; ++s)
      if (cfg.fractional)
        deltas.emplace_back(quarter(1, 8), quarter(0, 12));
      else
        deltas.emplace_back(Rational(rng.range(1, 3)), Rational(rng.range(0, 3)));
    if (cfg.concave)
      std::stable_sort(deltas.begin(), deltas.end(), [](const auto& a, const auto& b) {
        return a.second / a.first > b.second / b.first;
      });
    std::vector<Breakpoint> breakpoints{{Rational(0), Rational(rng.range(0, 2))}};
    for (const auto& [dt, dv] : deltas)
      breakpoints.push_back(
          {breakpoints.back().time + dt, breakpoints.back().value + dv});
    total_final += breakpoints.back().value;
    profiles.emplace_back(std::move(breakpoints));
  }
  const auto scale = at_least(0, cfg.bound);
  const Rational budget =
      cfg.fractional ? quarter(0, 4 * scale) : Rational(rng.range(0, scale));
  const Rational target = Rational(rng.range(0, 9), 8) * total_final;
  return PerformanceProfilesInstance(std::move(profiles), budget, target);
}

EvaluationNode random_eval_node(SplitMix64& rng, int depth) {
  const bool leaf = depth >= 2 || (depth > 0 ? rng.below(8) < 7 : rng.below(4) < 1);
  if (leaf) return EvaluationNode::leaf(Rational(rng.range(-3, 5)));
  const Rational cost(rng.range(1, 3));
  const auto children = rng.range(2, 3);
  std::vector<std::int64_t> weights;
  std::int64_t total_weight = 0;
  for (std::int64_t c = 0; c < children; ++c) {
    weights.push_back(rng.range(1, 4));
    total_weight += weights.back();
  }
  std::vector<EvaluationNode::Edge> edges;
  for (std::int64_t c = 0; c < children; ++c)
    edges.emplace_back(Rational(weights[static_cast<std::size_t>(c)], total_weight),
                       random_eval_node(rng, depth + 1));
  return EvaluationNode::internal(cost, std::move(edges));
}

ActionEvaluationInstance random_evaluation(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto count = rng.range(1, at_least(1, cfg.size));
  std::vector<EvaluationTree> trees;
  for (std::int64_t t = 0; t < count; ++t) trees.push_back(random_eval_node(rng, 0));
  return ActionEvaluationInstance(std::move(trees),
                                  Rational(rng.range(0, at_least(0, cfg.bound))));
}

DisambiguationInstance random_disambiguation(SplitMix64& rng, const GeneratorConfig& cfg) {
  const auto count = rng.range(1, at_least(1, cfg.size));
  const auto s = static_cast<std::size_t>(count);
  std::vector<std::string> states;
  for (std::size_t i = 1; i <= s; ++i) states.push_back("s" + std::to_string(i));

  std::vector<std::int64_t> mass(s);
  std::int64_t total_mass = 0;
  for (auto& w : mass) total_mass += (w = rng.range(0, 3));
  if (total_mass == 0) total_mass = mass[0] = 1;
  std::vector<Rational> prior;
  for (std::int64_t w : mass) prior.emplace_back(w, total_mass);

  std::vector<Rational> utility;
  Rational expected(0);
  for (std::size_t i = 0; i < s; ++i) {
    utility.emplace_back(rng.range(0, 4));
    expected += prior[i] * utility[i];
  }
  if (expected.is_zero())
    for (std::size_t i = 0; i < s; ++i)
      if (prior[i].is_positive()) {
        utility[i] = Rational(rng.range(1, 4));
        expected = prior[i] * utility[i];
        break;
      }

  const auto query_count = rng.range(1, at_least(1, cfg.width));
  std::vector<DisambiguationInstance::Query> queries;
  for (std::int64_t q = 0; q < query_count; ++q) {
    DisambiguationInstance::Query query(static_cast<std::size_t>(rng.range(2, 3)));
    for (std::size_t i = 0; i < s; ++i)
      query[rng.below(query.size())].push_back(i);
    if (rng.coin()) {
      const std::size_t extra = rng.below(s);
      auto& answer = query[rng.below(query.size())];
      if (std::find(answer.begin(), answer.end(), extra) == answer.end())
        answer.push_back(extra);
    }
    queries.push_back(std::move(query));
  }

  const auto budget = rng.range(0, at_least(0, cfg.bound));
  const Rational target = Rational(rng.range(0, 9), 8) * expected;
  return DisambiguationInstance(std::move(states), std::move(prior), std::move(utility),
                                std::move(queries), budget, target);
}

}  // namespace

InstanceDocument generate(const GeneratorConfig& config) {
  SplitMix64 rng(config.seed);
  switch (config.kind) {
    case DocumentKind::Knapsack:
      return InstanceDocument(random_knapsack(rng, config));
    case DocumentKind::SetCover:
      return InstanceDocument(random_setcover(rng, config));
    case DocumentKind::Ssat:
      return InstanceDocument(random_ssat(rng, config));
    case DocumentKind::PerformanceProfiles:
      return InstanceDocument(random_profiles(rng, config));
    case DocumentKind::ActionEvaluation:
      return InstanceDocument(random_evaluation(rng, config));
    case DocumentKind::StateDisambiguation:
      return InstanceDocument(random_disambiguation(rng, config));
  }
  throw DomainError("unknown document kind");
}

}  // namespace metareason::gen
