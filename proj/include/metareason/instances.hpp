#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "metareason/profile.hpp"
#include "metareason/rational.hpp"

namespace metareason {

struct KnapsackItem {
  std::int64_t cost = 0;
  std::int64_t value = 0;
  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

/// Decision-form knapsack: is there a subset with total cost <= capacity and
/// total value >= target? All entries are positive integers; the item list may
/// be empty.
struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;
  std::int64_t target = 0;

  KnapsackInstance(std::vector<KnapsackItem> items, std::int64_t capacity,
                   std::int64_t target);

  std::int64_t total_value() const;
  std::int64_t total_cost() const;

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

/// Can some `bound` of the listed subsets cover the whole universe? Subsets are
/// stored as sorted, duplicate-free element indices into `universe`.
struct SetCoverInstance {
  std::vector<std::string> universe;  // distinct labels, order preserved
  std::vector<std::vector<std::size_t>> subsets;
  std::int64_t bound = 0;  // >= 1

  SetCoverInstance(std::vector<std::string> universe,
                   std::vector<std::vector<std::size_t>> subsets, std::int64_t bound);

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

enum class LiteralKind {
  Choice,  // set by the deciding agent ("x" variables)
  Chance,  // set uniformly at random ("y" variables)
};

struct SsatLiteral {
  LiteralKind kind = LiteralKind::Choice;
  int index = 1;  // 1-based variable pair index
  bool negated = false;
  friend auto operator<=>(const SsatLiteral&, const SsatLiteral&) = default;
};

/// Stochastic satisfiability in alternating pair form: for i = 1..n the agent
/// sets x_i, then nature flips y_i, and the agent wins if every clause holds.
/// Clauses are sorted and duplicate-free; an empty clause is legal (it simply
/// can never be satisfied).
struct SsatInstance {
  int variables = 0;  // number of (x_i, y_i) pairs, >= 1
  std::vector<std::vector<SsatLiteral>> clauses;

  SsatInstance(int variables, std::vector<std::vector<SsatLiteral>> clauses);

  friend bool operator==(const SsatInstance&, const SsatInstance&) = default;
};

/// Allocate a shared deliberation budget across independent profiles so the
/// summed value reaches the target.
struct PerformanceProfilesInstance {
  std::vector<PiecewiseLinearProfile> profiles;
  Rational budget;  // N >= 0
  Rational target;  // K >= 0

  PerformanceProfilesInstance(std::vector<PiecewiseLinearProfile> profiles,
                              Rational budget, Rational target);

  friend bool operator==(const PerformanceProfilesInstance&,
                         const PerformanceProfilesInstance&) = default;
};

}  // namespace metareason
