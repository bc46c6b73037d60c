#include "support/sd_enum_oracle.hpp"

#include <cstdint>
#include <vector>

namespace testoracle {

using metareason::DisambiguationInstance;
using metareason::Rational;

namespace {

// Identification requires the answers alone to leave a single candidate
// state; zero-mass candidates still count until some answer excludes them.
Rational stop_payoff(const DisambiguationInstance& inst, const std::vector<Rational>& mass,
                     const std::vector<bool>& candidate) {
  std::size_t alive = 0, which = 0;
  for (std::size_t s = 0; s < candidate.size(); ++s)
    if (candidate[s]) {
      ++alive;
      which = s;
    }
  return alive == 1 ? mass[which] * inst.utility[which] : Rational(0);
}

Rational recurse(const DisambiguationInstance& inst, const std::vector<Rational>& mass,
                 const std::vector<bool>& candidate, std::vector<bool>& asked,
                 std::int64_t remaining) {
  Rational best = stop_payoff(inst, mass, candidate);
  if (remaining == 0) return best;
  for (std::size_t q = 0; q < inst.queries.size(); ++q) {
    if (asked[q]) continue;
    const auto& query = inst.queries[q];
    std::vector<std::size_t> count(mass.size(), 0);
    for (const auto& answer : query)
      for (std::size_t s : answer) ++count[s];
    Rational total(0);
    asked[q] = true;
    for (const auto& answer : query) {
      std::vector<Rational> next(mass.size(), Rational(0));
      std::vector<bool> still(mass.size(), false);
      bool reachable = false;
      for (std::size_t s : answer) {
        still[s] = candidate[s];
        if (mass[s].is_positive()) {
          next[s] = mass[s] / Rational(static_cast<long long>(count[s]));
          reachable = true;
        }
      }
      if (reachable) total += recurse(inst, next, still, asked, remaining - 1);
    }
    asked[q] = false;
    if (total > best) best = total;
  }
  return best;
}

}  // namespace

Rational sd_value(const DisambiguationInstance& instance) {
  std::vector<bool> asked(instance.queries.size(), false);
  std::vector<bool> candidate(instance.state_count(), true);
  return recurse(instance, instance.prior, candidate, asked, instance.budget);
}

}  // namespace testoracle
