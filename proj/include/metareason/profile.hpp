#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metareason/rational.hpp"

namespace metareason {

struct Breakpoint {
  Rational time;
  Rational value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Nondecreasing piecewise-linear function of deliberation time. Breakpoints
/// start at time 0, times strictly increase, values never decrease; between
/// breakpoints the function interpolates linearly and beyond the last one it
/// stays constant.
class PiecewiseLinearProfile {
 public:
  explicit PiecewiseLinearProfile(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  /// Exact value at time t >= 0; throws DomainError for negative t.
  Rational eval(const Rational& t) const;

  /// One entry per pair of consecutive breakpoints; empty for a single
  /// breakpoint (a constant profile).
  struct Segment {
    Rational start;        // left breakpoint time
    Rational length;       // > 0
    Rational start_value;  // value at the left breakpoint
    Rational slope;        // >= 0
  };
  const std::vector<Segment>& segments() const { return segments_; }

  const Rational& final_value() const { return points_.back().value; }
  const Rational& final_time() const { return points_.back().time; }

  /// Concave iff segment slopes are nonincreasing left to right.
  bool is_concave() const { return !first_slope_increase().has_value(); }

  /// Index i of the first segment whose successor is strictly steeper, if any.
  std::optional<std::size_t> first_slope_increase() const;

  friend bool operator==(const PiecewiseLinearProfile& a, const PiecewiseLinearProfile& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Breakpoint> points_;
  std::vector<Segment> segments_;
};

}  // namespace metareason
