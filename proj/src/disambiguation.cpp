#include "metareason/disambiguation.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

DisambiguationInstance::DisambiguationInstance(
    std::vector<std::string> states_in, std::vector<Rational> prior_in,
    std::vector<Rational> utility_in, std::vector<Query> queries_in,
    std::int64_t budget_in, Rational target_in)
    : states(std::move(states_in)),
      prior(std::move(prior_in)),
      utility(std::move(utility_in)),
      queries(std::move(queries_in)),
      budget(budget_in),
      target(std::move(target_in)) {
  if (states.empty()) throw ValidationError("states: must not be empty");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!seen.insert(states[i]).second)
      throw ValidationError("states[" + std::to_string(i) + "]: duplicate label '" +
                            states[i] + "'");
  if (prior.size() != states.size())
    throw ValidationError("prior: must assign a probability to every state");
  if (utility.size() != states.size())
    throw ValidationError("utility: must assign a value to every state");
  Rational total = 0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (prior[i].is_negative())
      throw ValidationError("prior['" + states[i] + "']: must be nonnegative");
    total += prior[i];
  }
  if (total != Rational(1))
    throw ValidationError("prior: probabilities sum to " + total.str() + ", expected 1");
  for (std::size_t i = 0; i < utility.size(); ++i)
    if (utility[i].is_negative())
      throw ValidationError("utility['" + states[i] + "']: must be nonnegative");
  for (std::size_t q = 0; q < queries.size(); ++q) {
    auto& query = queries[q];
    const std::string where = "queries[" + std::to_string(q) + "]";
    if (query.empty()) throw ValidationError(where + ": needs at least one answer");
    std::vector<bool> covered(states.size(), false);
    for (std::size_t a = 0; a < query.size(); ++a) {
      auto& answer = query[a];
      std::sort(answer.begin(), answer.end());
      for (std::size_t j = 0; j < answer.size(); ++j) {
        if (answer[j] >= states.size())
          throw ValidationError(where + "[" + std::to_string(a) +
                                "]: state index out of range");
        if (j > 0 && answer[j] == answer[j - 1])
          throw ValidationError(where + "[" + std::to_string(a) + "]: duplicate state '" +
                                states[answer[j]] + "'");
        covered[answer[j]] = true;
      }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
      throw ValidationError(where + ": answers must cover every state");
  }
  if (budget < 0) throw ValidationError("budget: must be nonnegative");
  if (target.is_negative()) throw ValidationError("target: must be nonnegative");
}

}  // namespace metareason
