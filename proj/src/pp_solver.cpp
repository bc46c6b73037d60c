#include "metareason/pp_solver.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason::pp {

namespace {

// One linear piece an allocation may terminate in. Profiles without segments
// (a single breakpoint) get a degenerate piece pinned at time 0 so that every
// profile contributes exactly one landing choice.
struct Piece {
  Rational start;
  Rational length;
  Rational start_value;
  Rational slope;
};

std::vector<std::vector<Piece>> landing_pieces(const PerformanceProfilesInstance& inst) {
  std::vector<std::vector<Piece>> pieces(inst.profiles.size());
  for (std::size_t i = 0; i < inst.profiles.size(); ++i) {
    const auto& profile = inst.profiles[i];
    if (profile.segments().empty()) {
      pieces[i].push_back({Rational(0), Rational(0), profile.final_value(), Rational(0)});
      continue;
    }
    for (const auto& s : profile.segments())
      pieces[i].push_back({s.start, s.length, s.start_value, s.slope});
  }
  return pieces;
}

struct Candidate {
  Rational value;
  std::vector<Rational> times;
};

// Total order used everywhere a best candidate is kept: higher value first,
// then the lexicographically smaller time vector. Any merge order yields the
// same winner, which is what makes the parallel kernel deterministic.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.times < b.times;
}

// Lands profile i in pieces[i][choice[i]], pays every piece's start time, then
// pours the residual budget by decreasing slope. Ties go to the highest
// profile index so earlier coordinates stay as small as possible, which makes
// the returned vector the lexicographically smallest optimum for this choice.
std::optional<Candidate> evaluate_choice(const std::vector<std::vector<Piece>>& pieces,
                                         const std::vector<std::size_t>& choice,
                                         const Rational& budget) {
  const std::size_t m = pieces.size();
  Rational base_cost = 0;
  for (std::size_t i = 0; i < m; ++i) base_cost += pieces[i][choice[i]].start;
  if (budget < base_cost) return std::nullopt;
  Rational residual = budget - base_cost;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational& sa = pieces[a][choice[a]].slope;
    const Rational& sb = pieces[b][choice[b]].slope;
    if (sa != sb) return sa > sb;
    return a > b;
  });

  Candidate cand;
  cand.value = 0;
  cand.times.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const Piece& piece = pieces[i][choice[i]];
    cand.times[i] = piece.start;
    cand.value += piece.start_value;
  }
  for (std::size_t rank = 0; rank < m && residual.is_positive(); ++rank) {
    const std::size_t i = order[rank];
    const Piece& piece = pieces[i][choice[i]];
    if (!piece.slope.is_positive()) break;  // sorted, nothing steeper remains
    const Rational take = std::min(residual, piece.length);
    cand.times[i] += take;
    cand.value += piece.slope * take;
    residual -= take;
  }
  return cand;
}

std::size_t choice_space_size(const std::vector<std::vector<Piece>>& pieces) {
  std::size_t total = 1;
  for (const auto& options : pieces) {
    if (options.size() > (std::size_t{1} << 40) / std::max<std::size_t>(total, 1))
      throw Error("joint landing-piece enumeration is too large for this solver");
    total *= options.size();
  }
  return total;
}

std::vector<std::size_t> decode_choice(const std::vector<std::vector<Piece>>& pieces,
                                       std::size_t index) {
  std::vector<std::size_t> choice(pieces.size());
  for (std::size_t i = pieces.size(); i-- > 0;) {
    choice[i] = index % pieces[i].size();
    index /= pieces[i].size();
  }
  return choice;
}

Allocation finish(std::optional<Candidate> best, std::size_t m) {
  if (!best) {
    // Budget >= 0 always admits the all-zero allocation, so this cannot happen.
    throw Error("no feasible allocation found");
  }
  Allocation result;
  result.times = std::move(best->times);
  result.value = std::move(best->value);
  if (result.times.size() != m) throw Error("allocation arity mismatch");
  return result;
}

}  // namespace

Allocation optimal_allocation_serial(const PerformanceProfilesInstance& instance) {
  const auto pieces = landing_pieces(instance);
  const std::size_t m = pieces.size();
  std::optional<Candidate> best;
  std::vector<std::size_t> choice(m, 0);
  const auto consider = [&](const std::vector<std::size_t>& c) {
    auto cand = evaluate_choice(pieces, c, instance.budget);
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
  };
  // Plain depth-first walk over all joint landing choices.
  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      consider(choice);
      return;
    }
    for (std::size_t k = 0; k < pieces[i].size(); ++k) {
      choice[i] = k;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return finish(std::move(best), m);
}

Allocation optimal_allocation(const PerformanceProfilesInstance& instance) {
  const auto pieces = landing_pieces(instance);
  const std::size_t m = pieces.size();
  const std::size_t total = choice_space_size(pieces);
  std::optional<Candidate> best;
  std::string error;
#pragma omp parallel
  {
    std::optional<Candidate> local;
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
      try {
        auto cand = evaluate_choice(pieces, decode_choice(pieces, static_cast<std::size_t>(idx)),
                                    instance.budget);
        if (cand && (!local || better(*cand, *local))) local = std::move(cand);
      } catch (const std::exception& e) {
#pragma omp critical(pp_enum_error)
        if (error.empty()) error = e.what();
      }
    }
#pragma omp critical(pp_enum_merge)
    if (local && (!best || better(*local, *best))) best = std::move(local);
  }
  if (!error.empty()) throw Error(error);
  return finish(std::move(best), m);
}

bool decide(const PerformanceProfilesInstance& instance) {
  return !(optimal_allocation(instance).value < instance.target);
}

Allocation concave_allocation(const PerformanceProfilesInstance& instance) {
  for (std::size_t i = 0; i < instance.profiles.size(); ++i) {
    if (const auto bad = instance.profiles[i].first_slope_increase()) {
      const auto& segs = instance.profiles[i].segments();
      throw DomainError("profiles[" + std::to_string(i) + "]: not concave; segment " +
                        std::to_string(*bad) + " has slope " + segs[*bad].slope.str() +
                        " but segment " + std::to_string(*bad + 1) + " has slope " +
                        segs[*bad + 1].slope.str());
    }
  }
  struct Ref {
    std::size_t profile;
    std::size_t segment;
  };
  std::vector<Ref> order;
  for (std::size_t i = 0; i < instance.profiles.size(); ++i)
    for (std::size_t j = 0; j < instance.profiles[i].segments().size(); ++j)
      order.push_back({i, j});
  const auto slope_of = [&](const Ref& r) -> const Rational& {
    return instance.profiles[r.profile].segments()[r.segment].slope;
  };
  std::sort(order.begin(), order.end(), [&](const Ref& a, const Ref& b) {
    const Rational& sa = slope_of(a);
    const Rational& sb = slope_of(b);
    if (sa != sb) return sa > sb;
    if (a.profile != b.profile) return a.profile < b.profile;
    return a.segment < b.segment;
  });

  Allocation result;
  result.times.assign(instance.profiles.size(), Rational(0));
  result.value = 0;
  for (const auto& profile : instance.profiles) result.value += profile.breakpoints().front().value;
  Rational remaining = instance.budget;
  for (const Ref& r : order) {
    if (!remaining.is_positive()) break;
    const auto& seg = instance.profiles[r.profile].segments()[r.segment];
    if (!seg.slope.is_positive()) break;  // only flat pieces remain
    const Rational take = std::min(remaining, seg.length);
    result.times[r.profile] += take;
    result.value += seg.slope * take;
    remaining -= take;
  }
  return result;
}

namespace {

std::size_t lattice_steps(const PerformanceProfilesInstance& instance, const Rational& step) {
  if (!step.is_positive()) throw DomainError("grid step must be positive");
  const Rational q = instance.budget / step;
  if (!q.is_integer())
    throw DomainError("grid step " + step.str() + " does not divide the budget " +
                      instance.budget.str());
  const mpz_class units = q.numerator();
  if (units > 1'000'000) throw DomainError("grid lattice is too fine for this oracle");
  return units.get_ui();
}

// Values never decrease with time, so for a fixed prefix the last profile
// always takes every remaining lattice unit.
Rational grid_rest(const PerformanceProfilesInstance& inst, const Rational& step,
                   std::size_t profile, std::size_t units) {
  const std::size_t m = inst.profiles.size();
  if (profile + 1 == m) return inst.profiles[profile].eval(Rational(static_cast<long>(units)) * step);
  Rational best = 0;
  for (std::size_t k = 0; k <= units; ++k) {
    const Rational v = inst.profiles[profile].eval(Rational(static_cast<long>(k)) * step) +
                       grid_rest(inst, step, profile + 1, units - k);
    if (best < v || k == 0) best = v;
  }
  return best;
}

}  // namespace

Rational grid_oracle_serial(const PerformanceProfilesInstance& instance, const Rational& step) {
  const std::size_t units = lattice_steps(instance, step);
  if (instance.profiles.empty()) return Rational(0);
  return grid_rest(instance, step, 0, units);
}

Rational grid_oracle(const PerformanceProfilesInstance& instance, const Rational& step) {
  const std::size_t units = lattice_steps(instance, step);
  if (instance.profiles.empty()) return Rational(0);
  if (instance.profiles.size() == 1)
    return instance.profiles[0].eval(Rational(static_cast<long>(units)) * step);
  Rational best = 0;
  bool have_best = false;
  std::string error;
#pragma omp parallel
  {
    Rational local = 0;
    bool have_local = false;
#pragma omp for schedule(static) nowait
    for (long long k = 0; k <= static_cast<long long>(units); ++k) {
      try {
        const Rational v =
            instance.profiles[0].eval(Rational(k) * step) +
            grid_rest(instance, step, 1, units - static_cast<std::size_t>(k));
        if (!have_local || local < v) {
          local = v;
          have_local = true;
        }
      } catch (const std::exception& e) {
#pragma omp critical(pp_grid_error)
        if (error.empty()) error = e.what();
      }
    }
#pragma omp critical(pp_grid_merge)
    if (have_local && (!have_best || best < local)) {
      best = local;
      have_best = true;
    }
  }
  if (!error.empty()) throw Error(error);
  return best;
}

}  // namespace metareason::pp
