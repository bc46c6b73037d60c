#include <doctest.h>

#include <string>
#include <vector>

#include "metareason/errors.hpp"
#include "metareason/io.hpp"
#include "metareason/oracles.hpp"
#include "metareason/reductions.hpp"
#include "metareason/sd_solver.hpp"

using namespace metareason;
using oracles::ReductionKind;

namespace {

KnapsackInstance load_knapsack(const char* name) {
  return load_instance(std::string(METAREASON_FIXTURES_DIR) + "/" + name)
      .as<KnapsackInstance>();
}

}  // namespace

TEST_CASE("profile gadget: one deferred ramp per item") {
  const auto produced = reductions::knapsack_to_pp(load_knapsack("ks_two_items.json"));
  REQUIRE(produced.profiles.size() == 2);
  CHECK(produced.budget == Rational(5));   // capacity 2 plus target 3
  CHECK(produced.target == Rational(3));

  const auto segments = produced.profiles[1].segments();  // item (cost 2, value 3)
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].length == Rational(2));
  CHECK(segments[0].slope == Rational(0));
  CHECK(segments[1].length == Rational(3));
  CHECK(segments[1].slope == Rational(1));
  CHECK(produced.profiles[1].final_value() == Rational(3));
}

TEST_CASE("profile gadget equivalence, exhaustively at small sizes") {
  for (std::int64_t c1 = 1; c1 <= 3; ++c1)
    for (std::int64_t v1 = 1; v1 <= 3; ++v1)
      for (std::int64_t c2 = 1; c2 <= 3; ++c2)
        for (std::int64_t v2 = 1; v2 <= 3; ++v2)
          for (std::int64_t cap = 1; cap <= c1 + c2; ++cap)
            for (std::int64_t target = 1; target <= v1 + v2 + 1; ++target) {
              const InstanceDocument doc(
                  KnapsackInstance({{c1, v1}, {c2, v2}}, cap, target));
              const auto report =
                  oracles::verify_reduction(ReductionKind::KnapsackToProfiles, doc);
              CAPTURE(cap);
              CAPTURE(target);
              REQUIRE(report.equivalent);
            }
}

TEST_CASE("evaluation gadget: probe, bundle, floor, and per-item trees") {
  const auto produced = reductions::knapsack_to_ae(load_knapsack("ks_single_item.json"));
  REQUIRE(produced.trees.size() == 4);
  CHECK(produced.budget == Rational(3));  // capacity 2 plus 1

  const auto& probe = produced.trees[0];
  CHECK(probe.step_cost() == Rational(1));
  CHECK(probe.children()[0].first == Rational(1, 24));
  CHECK(probe.children()[0].second.leaf_value() == Rational(1));
  CHECK(probe.children()[1].first == Rational(23, 24));
  CHECK(probe.children()[1].second.leaf_value() == Rational(-1));

  const auto& bundle = produced.trees[1];
  CHECK(bundle.step_cost() == Rational(3));
  CHECK(bundle.children()[0].first == Rational(23, 384));

  CHECK(produced.trees[2].leaf_value() == Rational(0));

  const auto& item = produced.trees[3];
  CHECK(item.step_cost() == Rational(2));
  CHECK(item.children()[0].first == Rational(1, 48));  // delta times item value
}

TEST_CASE("evaluation gadget needs at least one item and clamps wild targets") {
  CHECK_THROWS_AS(reductions::knapsack_to_ae(KnapsackInstance({}, 1, 1)), DomainError);

  const auto modest = reductions::knapsack_to_ae(KnapsackInstance({{2, 3}}, 2, 4));
  const auto wild = reductions::knapsack_to_ae(KnapsackInstance({{2, 3}}, 2, 400));
  CHECK(modest == wild);  // both targets exceed the total value 3
}

TEST_CASE("identification gadget: membership queries plus a goal state") {
  const auto source =
      load_instance(std::string(METAREASON_FIXTURES_DIR) + "/sc_two_elements.json")
          .as<SetCoverInstance>();
  const auto produced = reductions::setcover_to_sd(source);
  const std::vector<std::string> states{"e1", "e2", "b"};
  CHECK(produced.states == states);
  CHECK(produced.prior == std::vector<Rational>(3, Rational(1, 3)));
  const std::vector<Rational> utility{Rational(0), Rational(0), Rational(1)};
  CHECK(produced.utility == utility);
  CHECK(produced.budget == 2);
  CHECK(produced.target == Rational(1, 3));

  REQUIRE(produced.queries.size() == 2);
  const DisambiguationInstance::Query first{{1, 2}, {0}};  // outside {e1}, then inside
  CHECK(produced.queries[0] == first);
  const DisambiguationInstance::Query second{{0, 2}, {1}};
  CHECK(produced.queries[1] == second);
}

TEST_CASE("identification gadget avoids goal label collisions") {
  const auto produced = reductions::setcover_to_sd(SetCoverInstance({"b", "b0"}, {{0, 1}}, 1));
  const std::vector<std::string> states{"b", "b0", "b1"};
  CHECK(produced.states == states);
  CHECK(produced.utility[2] == Rational(1));
}

TEST_CASE("quantifier gadget layout on a single chance clause") {
  const auto gadget = reductions::ssat_to_sd(SsatInstance(1, {{{LiteralKind::Chance, 1, false}}}));
  const auto& produced = gadget.instance;
  const std::vector<std::string> states{"c1", "b", "v11"};
  CHECK(produced.states == states);
  CHECK(gadget.layout.clause_states == std::vector<std::string>{"c1"});
  CHECK(gadget.layout.goal_state == "b");
  CHECK(gadget.layout.matrix_states == std::vector<std::string>{"v11"});
  const std::vector<std::string> labels{"q11", "qx1", "q-x1"};
  CHECK(gadget.layout.query_labels == labels);

  CHECK(produced.budget == 1);
  CHECK(produced.prior == std::vector<Rational>(3, Rational(1, 3)));
  CHECK(produced.utility[1] == Rational(1));
  CHECK(produced.utility[2] == Rational(64));  // twice the product of answer counts
  CHECK(produced.target == Rational(43, 2));

  REQUIRE(produced.queries.size() == 3);
  const DisambiguationInstance::Query probe{{2}, {0, 1}};
  CHECK(produced.queries[0] == probe);
  // Playing x1: the clause {y1} is satisfied only by nature's y1 branch.
  const DisambiguationInstance::Query choice{{2}, {0}, {1}, {0, 1}};
  CHECK(produced.queries[1] == choice);
  CHECK(produced.queries[2] == choice);  // negating x1 changes nothing here
}

TEST_CASE("quantifier gadget rejects more than nine variable pairs") {
  CHECK_THROWS_AS(reductions::ssat_to_sd(SsatInstance(10, {})), DomainError);
}

TEST_CASE("quantifier gadget on a choice literal separates the two plays") {
  const auto gadget = reductions::ssat_to_sd(SsatInstance(1, {{{LiteralKind::Choice, 1, false}}}));
  const auto& produced = gadget.instance;
  // Playing x1 satisfies {x1}; playing its negation leaves the clause alive.
  const DisambiguationInstance::Query affirm{{2}, {0}, {1}, {1}};
  CHECK(produced.queries[1] == affirm);
  const DisambiguationInstance::Query deny{{2}, {0}, {0, 1}, {0, 1}};
  CHECK(produced.queries[2] == deny);

  const auto solved = sd::optimal_expected_utility(produced);
  CHECK(solved.value >= produced.target);  // the formula is satisfiable
}

TEST_CASE("reduction equivalence on the bundled micro fixtures") {
  const std::vector<std::pair<ReductionKind, const char*>> cases = {
      {ReductionKind::KnapsackToProfiles, "ks_two_items.json"},
      {ReductionKind::KnapsackToProfiles, "ks_unit_item.json"},
      {ReductionKind::KnapsackToEvaluation, "ks_two_items.json"},
      {ReductionKind::KnapsackToEvaluation, "ks_single_item.json"},
      {ReductionKind::KnapsackToEvaluation, "ks_unit_item.json"},
      {ReductionKind::SetCoverToDisambiguation, "sc_two_elements.json"},
      {ReductionKind::SetCoverToDisambiguation, "sc_uncoverable.json"},
      {ReductionKind::SsatToDisambiguation, "ssat_single_clause.json"},
      {ReductionKind::SsatToDisambiguation, "ssat_contradiction.json"},
  };
  for (const auto& [kind, name] : cases) {
    const auto doc = load_instance(std::string(METAREASON_FIXTURES_DIR) + "/" + name);
    const auto report = oracles::verify_reduction(kind, doc);
    CAPTURE(name);
    CHECK(report.equivalent);
  }
}
