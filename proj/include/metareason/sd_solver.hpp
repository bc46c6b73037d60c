#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "metareason/disambiguation.hpp"
#include "metareason/rational.hpp"

namespace metareason::sd {

/// What the agent knows after some answer history. `weights` is the joint
/// mass: prior times the probability of the answers received so far; the
/// total shrinks from 1 as branches split. `consistent` marks the states no
/// received answer has excluded. The two differ on zero-prior states, which
/// carry no mass but still block certain identification until an answer
/// rules them out.
struct KnowledgeState {
  std::vector<Rational> weights;
  std::vector<bool> consistent;

  std::vector<std::size_t> support() const;  // states with positive weight
  Rational total() const;
  friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;
};

/// How nature answers a query that is asked again along one policy branch.
enum class AnswerModel {
  /// An answer is a fixed property of the true state, drawn once; asking the
  /// same query again returns it unchanged, so repeats carry no information.
  Persistent,
  /// Nature redraws uniformly among consistent answers on every ask, so
  /// repeats can be informative.
  Resampled,
};

KnowledgeState initial_knowledge(const DisambiguationInstance& instance);

/// Probability of each answer position of `query` when `state` is true:
/// 1/n over the n positions containing the state, 0 elsewhere.
std::vector<Rational> answer_distribution(const DisambiguationInstance& instance,
                                          std::size_t query, std::size_t state);

/// Bayes update for receiving answer position `answer` of `query`.
KnowledgeState refine(const DisambiguationInstance& instance, const KnowledgeState& k,
                      std::size_t query, std::size_t answer);

/// Expected payoff of stopping now: weight times utility when exactly one
/// state is still consistent with the received answers, otherwise 0. The
/// identification condition deliberately ignores weights so that rescaling
/// prior and utility never changes which branches count as identified.
Rational terminal_utility(const DisambiguationInstance& instance, const KnowledgeState& k);

/// Conditional query plan; `on_answer` lists only answers that can actually
/// arrive (positive refined mass).
struct SdPolicy {
  std::optional<std::size_t> query;  // nullopt = stop
  std::vector<std::pair<std::size_t, SdPolicy>> on_answer;
};

struct SolveResult {
  Rational value;
  SdPolicy policy;
};

/// Memoized expectimax over (knowledge state, queries already asked on this
/// branch, remaining budget). Ties prefer stopping when asking gains nothing,
/// then the lowest query index.
SolveResult optimal_expected_utility(const DisambiguationInstance& instance,
                                     AnswerModel model = AnswerModel::Persistent);

/// Value achieved by each possible first query under optimal continuation.
std::vector<Rational> first_query_values(const DisambiguationInstance& instance,
                                         AnswerModel model = AnswerModel::Persistent);

/// optimal expected utility >= target?
bool decide(const DisambiguationInstance& instance, AnswerModel model = AnswerModel::Persistent);

/// Equivalent instance with a uniform prior; utilities absorb the old prior
/// (scaled by state count), target unchanged.
DisambiguationInstance to_uniform_prior(const DisambiguationInstance& instance);

/// Equivalent instance with all-ones utility; the prior absorbs utilities and
/// the target rescales by 1/sum(prior * utility). Throws DomainError when that
/// sum is zero.
DisambiguationInstance to_constant_utility(const DisambiguationInstance& instance);

}  // namespace metareason::sd
