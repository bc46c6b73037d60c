#include "metareason/profile.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

PiecewiseLinearProfile::PiecewiseLinearProfile(std::vector<Breakpoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw ValidationError("breakpoints: must not be empty");
  if (!points_.front().time.is_zero())
    throw ValidationError("breakpoints[0].time: must be 0");
  if (points_.front().value.is_negative())
    throw ValidationError("breakpoints[0].value: must be nonnegative");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].time < points_[i].time))
      throw ValidationError("breakpoints[" + std::to_string(i) +
                            "].time: times must be strictly increasing");
    if (points_[i].value < points_[i - 1].value)
      throw ValidationError("breakpoints[" + std::to_string(i) +
                            "].value: values must be nondecreasing");
  }
  segments_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    Segment s;
    s.start = points_[i].time;
    s.length = points_[i + 1].time - points_[i].time;
    s.start_value = points_[i].value;
    s.slope = (points_[i + 1].value - points_[i].value) / s.length;
    segments_.push_back(std::move(s));
  }
}

Rational PiecewiseLinearProfile::eval(const Rational& t) const {
  if (t.is_negative()) throw DomainError("profile evaluated at negative time " + t.str());
  if (!(t < points_.back().time)) return points_.back().value;
  // Last breakpoint with time <= t; t < final_time so a following segment exists.
  const auto it = std::upper_bound(
      points_.begin(), points_.end(), t,
      [](const Rational& value, const Breakpoint& bp) { return value < bp.time; });
  const auto idx = static_cast<std::size_t>(it - points_.begin()) - 1;
  const Segment& s = segments_[idx];
  if (t == s.start) return s.start_value;
  return s.start_value + s.slope * (t - s.start);
}

std::optional<std::size_t> PiecewiseLinearProfile::first_slope_increase() const {
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
    if (segments_[i].slope < segments_[i + 1].slope) return i;
  return std::nullopt;
}

}  // namespace metareason
