#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metareason/rational.hpp"

namespace metareason {

/// Identify the true hidden state by asking eliminative queries. Each query has
/// a list of answers (subsets of the state space whose union covers it; the
/// same answer set may appear more than once and positions count separately).
/// Nature returns one of the answers containing the true state, uniformly at
/// random. Utility u(theta) is collected only if after `budget` queries the
/// states consistent with every received answer have shrunk to {theta}.
struct DisambiguationInstance {
  using Answer = std::vector<std::size_t>;  // sorted state indices
  using Query = std::vector<Answer>;

  std::vector<std::string> states;  // distinct labels, order preserved
  std::vector<Rational> prior;      // aligned with states; >= 0; sums to exactly 1
  std::vector<Rational> utility;    // aligned with states; >= 0
  std::vector<Query> queries;
  std::int64_t budget = 0;  // N >= 0, number of queries the policy may ask
  Rational target;          // G >= 0

  DisambiguationInstance(std::vector<std::string> states, std::vector<Rational> prior,
                         std::vector<Rational> utility, std::vector<Query> queries,
                         std::int64_t budget, Rational target);

  std::size_t state_count() const { return states.size(); }

  friend bool operator==(const DisambiguationInstance&,
                         const DisambiguationInstance&) = default;
};

}  // namespace metareason
