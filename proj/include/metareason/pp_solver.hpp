#pragma once

#include <vector>

#include "metareason/instances.hpp"
#include "metareason/rational.hpp"

namespace metareason::pp {

struct Allocation {
  std::vector<Rational> times;  // one per profile, sum <= budget
  Rational value;               // exact summed profile value
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Exact optimum over all real-valued allocations. Enumerates, per profile, the
/// linear piece the allocation terminates in, then fills the residual budget
/// greedily by decreasing slope. Among equally good optima returns the
/// lexicographically smallest time vector. OpenMP-parallel over joint piece
/// choices; the merge order cannot affect the result.
Allocation optimal_allocation(const PerformanceProfilesInstance& instance);

/// Single-threaded reference enumeration, kept for testing the kernel against.
Allocation optimal_allocation_serial(const PerformanceProfilesInstance& instance);

/// optimal value >= target?
bool decide(const PerformanceProfilesInstance& instance);

/// Polynomial greedy for concave profiles: repeatedly pour budget into the
/// globally steepest remaining piece, ties to the lowest profile index and the
/// leftmost piece. Throws DomainError naming the profile and segment pair when
/// some profile is not concave.
Allocation concave_allocation(const PerformanceProfilesInstance& instance);

/// Exhaustive maximum over allocations on the lattice {0, step, 2 step, ...};
/// a lower bound on the true optimum, exact on instances whose breakpoints and
/// budget all lie on the lattice. `step` must be positive and divide the
/// budget. OpenMP-parallel with a serial reference twin.
Rational grid_oracle(const PerformanceProfilesInstance& instance, const Rational& step);
Rational grid_oracle_serial(const PerformanceProfilesInstance& instance, const Rational& step);

}  // namespace metareason::pp
