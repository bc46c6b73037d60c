#include <doctest.h>

#include <string>
#include <vector>

#include "metareason/errors.hpp"
#include "metareason/io.hpp"

using namespace metareason;

namespace {

InstanceDocument roundtrip(const InstanceDocument& doc) {
  return parse_instance(serialize_instance(doc));
}

}  // namespace

TEST_CASE("every instance kind round-trips through its text form") {
  const std::vector<InstanceDocument> documents = {
      InstanceDocument(KnapsackInstance({{1, 2}, {2, 3}}, 2, 3)),
      InstanceDocument(SetCoverInstance({"e1", "e2", "e3"}, {{0, 2}, {1}}, 2)),
      InstanceDocument(SsatInstance(
          2, {{{LiteralKind::Choice, 1, false}, {LiteralKind::Chance, 2, true}}, {}})),
      InstanceDocument(PerformanceProfilesInstance(
          {PiecewiseLinearProfile({{Rational(0), Rational(0)}, {Rational(3), Rational(3, 2)}})},
          Rational(5, 4), Rational(1))),
      InstanceDocument(ActionEvaluationInstance(
          {EvaluationNode::internal(
               Rational(2), {{Rational(7, 40), EvaluationNode::leaf(Rational(10, 3))},
                             {Rational(33, 40), EvaluationNode::leaf(Rational(5, 99))}}),
           EvaluationNode::leaf(Rational(1))},
          Rational(3), {"probe", "baseline"})),
      InstanceDocument(DisambiguationInstance(
          {"s1", "s2"}, {Rational(1, 4), Rational(3, 4)}, {Rational(4), Rational(4)},
          {{{0}, {0, 1}}}, 1, Rational(1, 2))),
  };
  for (const auto& doc : documents) {
    CAPTURE(kind_name(doc.kind()));
    CHECK(roundtrip(doc) == doc);
  }
}

TEST_CASE("serialization is canonical and deterministic") {
  const InstanceDocument doc(KnapsackInstance({{1, 2}}, 1, 1));
  const auto text = serialize_instance(doc);
  CHECK(text == serialize_instance(roundtrip(doc)));
  CHECK(text.back() == '\n');
  CHECK(text.find("\"kind\": \"knapsack\"") != std::string::npos);
}

TEST_CASE("integer rational fields accept bare JSON integers") {
  const auto doc = parse_instance(R"({
    "kind": "performance-profiles",
    "profiles": [[[0, 0], [2, 1]]],
    "budget": 2,
    "target": "1/2"
  })");
  const auto& instance = doc.as<PerformanceProfilesInstance>();
  CHECK(instance.budget == Rational(2));
  CHECK(instance.target == Rational(1, 2));
}

TEST_CASE("malformed documents name the offending field") {
  CHECK_THROWS_WITH_AS(parse_instance("{"), doctest::Contains("invalid document syntax"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("[]"), "document root must be an object", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("{}"), "missing field 'kind'", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"kind": "sudoku"})"),
                       "kind: unknown instance kind 'sudoku'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"kind": "knapsack", "items": [], "capacity": 1})"),
      "missing field 'target'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(
          R"({"kind": "knapsack", "items": [], "capacity": 1, "target": 1, "extra": 0})"),
      "unexpected field 'extra'", ParseError);
}

TEST_CASE("floating point literals are rejected outright") {
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "performance-profiles",
        "profiles": [[[0, 0], [1, 0.5]]],
        "budget": 1,
        "target": 0
      })"),
      doctest::Contains("floating-point literals are not accepted"), ParseError);
}

TEST_CASE("validation failures surface as parse errors with paths") {
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "knapsack",
        "items": [{"cost": 0, "value": 1}],
        "capacity": 1,
        "target": 1
      })"),
      doctest::Contains("items[0].cost"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "performance-profiles",
        "profiles": [[[1, 0]]],
        "budget": 1,
        "target": 0
      })"),
      doctest::Contains("breakpoints[0].time"), ParseError);
}

TEST_CASE("disambiguation documents key prior and utility by state label") {
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "state-disambiguation",
        "states": ["s1", "s2"],
        "prior": {"s1": "1/2", "s2": "1/4", "s9": "1/4"},
        "utility": {"s1": "1", "s2": "1"},
        "queries": [[["s1"], ["s2"]]],
        "budget": 1,
        "target": "0"
      })"),
      doctest::Contains("unknown state 's9'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "state-disambiguation",
        "states": ["s1", "s2"],
        "prior": {"s1": "1"},
        "utility": {"s1": "1", "s2": "1"},
        "queries": [[["s1"], ["s2"]]],
        "budget": 1,
        "target": "0"
      })"),
      doctest::Contains("missing entry for state 's2'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({
        "kind": "state-disambiguation",
        "states": ["s1"],
        "prior": {"s1": "1"},
        "utility": {"s1": "1"},
        "queries": [[["ghost"]]],
        "budget": 1,
        "target": "0"
      })"),
      doctest::Contains("label 'ghost' is not a state"), ParseError);
}

TEST_CASE("ssat literals read sign, kind, and index") {
  const auto doc = parse_instance(R"({
    "kind": "ssat",
    "variables": 3,
    "clauses": [["x1", "-y2", "y3"]]
  })");
  const auto& instance = doc.as<SsatInstance>();
  REQUIRE(instance.clauses.size() == 1);
  REQUIRE(instance.clauses[0].size() == 3);
  const SsatLiteral first{LiteralKind::Choice, 1, false};
  CHECK(instance.clauses[0][0] == first);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"kind": "ssat", "variables": 1, "clauses": [["z1"]]})"),
      doctest::Contains("invalid literal 'z1'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"kind": "ssat", "variables": 1, "clauses": [["x2"]]})"),
      doctest::Contains("variable index out of range"), ParseError);
}

TEST_CASE("typed document access throws on kind mismatch") {
  const InstanceDocument doc(KnapsackInstance({}, 1, 1));
  CHECK(doc.kind() == DocumentKind::Knapsack);
  CHECK(doc.get_if<SsatInstance>() == nullptr);
  CHECK_THROWS_AS(doc.as<SsatInstance>(), DomainError);
  CHECK(doc.as<KnapsackInstance>().capacity == 1);
}

TEST_CASE("file helpers report unreadable paths") {
  CHECK_THROWS_WITH_AS(load_instance("/nonexistent/instance.json"),
                       doctest::Contains("cannot open"), ParseError);
}
