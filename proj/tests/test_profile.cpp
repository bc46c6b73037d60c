#include <doctest.h>

#include <string>
#include <vector>

#include "metareason/errors.hpp"
#include "metareason/profile.hpp"

using metareason::Breakpoint;
using metareason::DomainError;
using metareason::PiecewiseLinearProfile;
using metareason::Rational;
using metareason::ValidationError;

namespace {

PiecewiseLinearProfile ramp() {
  // Flat to 4, then slope 2 to (6, 4).
  return PiecewiseLinearProfile({{Rational(0), Rational(0)},
                                 {Rational(4), Rational(0)},
                                 {Rational(6), Rational(4)}});
}

}  // namespace

TEST_CASE("profile construction validates its breakpoints") {
  CHECK_THROWS_AS(PiecewiseLinearProfile({}), ValidationError);
  CHECK_THROWS_WITH_AS(
      PiecewiseLinearProfile({{Rational(1), Rational(0)}}),
      "breakpoints[0].time: must be 0", ValidationError);
  CHECK_THROWS_WITH_AS(
      PiecewiseLinearProfile(
          {{Rational(0), Rational(0)}, {Rational(2), Rational(1)}, {Rational(2), Rational(2)}}),
      "breakpoints[2].time: times must be strictly increasing", ValidationError);
  CHECK_THROWS_WITH_AS(
      PiecewiseLinearProfile({{Rational(0), Rational(3)}, {Rational(1), Rational(2)}}),
      "breakpoints[1].value: values must be nondecreasing", ValidationError);
}

TEST_CASE("evaluation interpolates and extends past the last breakpoint") {
  const auto profile = ramp();
  CHECK(profile.eval(Rational(0)) == Rational(0));
  CHECK(profile.eval(Rational(3)) == Rational(0));
  CHECK(profile.eval(Rational(4)) == Rational(0));
  CHECK(profile.eval(Rational(5)) == Rational(2));
  CHECK(profile.eval(Rational(9, 2)) == Rational(1));
  CHECK(profile.eval(Rational(6)) == Rational(4));
  CHECK(profile.eval(Rational(100)) == Rational(4));
  CHECK_THROWS_AS(profile.eval(Rational(-1, 2)), DomainError);
}

TEST_CASE("single breakpoint means a constant profile") {
  const PiecewiseLinearProfile flat({{Rational(0), Rational(7, 2)}});
  CHECK(flat.eval(Rational(0)) == Rational(7, 2));
  CHECK(flat.eval(Rational(5)) == Rational(7, 2));
  CHECK(flat.segments().empty());
  CHECK(flat.final_value() == Rational(7, 2));
  CHECK(flat.final_time() == Rational(0));
  CHECK(flat.is_concave());
}

TEST_CASE("segments carry start, length, start value, and slope") {
  const auto segments = ramp().segments();
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].start == Rational(0));
  CHECK(segments[0].length == Rational(4));
  CHECK(segments[0].start_value == Rational(0));
  CHECK(segments[0].slope == Rational(0));
  CHECK(segments[1].start == Rational(4));
  CHECK(segments[1].length == Rational(2));
  CHECK(segments[1].start_value == Rational(0));
  CHECK(segments[1].slope == Rational(2));
}

TEST_CASE("concavity detection points at the first violating pair") {
  CHECK_FALSE(ramp().is_concave());
  CHECK(ramp().first_slope_increase() == std::size_t{0});

  const PiecewiseLinearProfile concave({{Rational(0), Rational(0)},
                                        {Rational(1), Rational(3)},
                                        {Rational(3), Rational(5)},
                                        {Rational(10), Rational(5)}});
  CHECK(concave.is_concave());
  CHECK_FALSE(concave.first_slope_increase().has_value());

  const PiecewiseLinearProfile wobble({{Rational(0), Rational(0)},
                                       {Rational(1), Rational(2)},
                                       {Rational(2), Rational(3)},
                                       {Rational(3), Rational(6)}});
  CHECK(wobble.first_slope_increase() == std::size_t{1});
}
