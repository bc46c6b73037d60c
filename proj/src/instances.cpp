#include "metareason/instances.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

namespace {

std::string at(const char* field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

}  // namespace

KnapsackInstance::KnapsackInstance(std::vector<KnapsackItem> items_in,
                                   std::int64_t capacity_in, std::int64_t target_in)
    : items(std::move(items_in)), capacity(capacity_in), target(target_in) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].cost <= 0)
      throw ValidationError(at("items", i) + ".cost: must be a positive integer");
    if (items[i].value <= 0)
      throw ValidationError(at("items", i) + ".value: must be a positive integer");
  }
  if (capacity <= 0) throw ValidationError("capacity: must be a positive integer");
  if (target <= 0) throw ValidationError("target: must be a positive integer");
}

std::int64_t KnapsackInstance::total_value() const {
  std::int64_t s = 0;
  for (const auto& it : items) s += it.value;
  return s;
}

std::int64_t KnapsackInstance::total_cost() const {
  std::int64_t s = 0;
  for (const auto& it : items) s += it.cost;
  return s;
}

SetCoverInstance::SetCoverInstance(std::vector<std::string> universe_in,
                                   std::vector<std::vector<std::size_t>> subsets_in,
                                   std::int64_t bound_in)
    : universe(std::move(universe_in)), subsets(std::move(subsets_in)), bound(bound_in) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (!seen.insert(universe[i]).second)
      throw ValidationError(at("universe", i) + ": duplicate label '" + universe[i] + "'");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto& sub = subsets[i];
    std::sort(sub.begin(), sub.end());
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (sub[j] >= universe.size())
        throw ValidationError(at("subsets", i) + ": element index out of range");
      if (j > 0 && sub[j] == sub[j - 1])
        throw ValidationError(at("subsets", i) + ": duplicate element '" +
                              universe[sub[j]] + "'");
    }
  }
  if (bound <= 0) throw ValidationError("bound: must be a positive integer");
}

SsatInstance::SsatInstance(int variables_in,
                           std::vector<std::vector<SsatLiteral>> clauses_in)
    : variables(variables_in), clauses(std::move(clauses_in)) {
  if (variables < 1) throw ValidationError("variables: must be at least 1");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto& clause = clauses[i];
    std::sort(clause.begin(), clause.end());
    for (std::size_t j = 0; j < clause.size(); ++j) {
      if (clause[j].index < 1 || clause[j].index > variables)
        throw ValidationError(at("clauses", i) + ": variable index out of range");
      if (j > 0 && clause[j] == clause[j - 1])
        throw ValidationError(at("clauses", i) + ": duplicate literal");
    }
  }
}

PerformanceProfilesInstance::PerformanceProfilesInstance(
    std::vector<PiecewiseLinearProfile> profiles_in, Rational budget_in, Rational target_in)
    : profiles(std::move(profiles_in)),
      budget(std::move(budget_in)),
      target(std::move(target_in)) {
  if (budget.is_negative()) throw ValidationError("budget: must be nonnegative");
  if (target.is_negative()) throw ValidationError("target: must be nonnegative");
}

}  // namespace metareason
