// Regenerates the shipped fixture files. Run with the target directory as
// the only argument; every fixture is written in canonical form, so a clean
// checkout regenerates byte-identical files.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "metareason/io.hpp"

namespace {

using namespace metareason;

InstanceDocument three_profiles() {
  std::vector<PiecewiseLinearProfile> profiles;
  profiles.emplace_back(std::vector<Breakpoint>{{Rational(0), Rational(0)},
                                                {Rational(3), Rational(3, 2)}});
  profiles.emplace_back(std::vector<Breakpoint>{{Rational(0), Rational(0)},
                                                {Rational(2), Rational(1)}});
  profiles.emplace_back(std::vector<Breakpoint>{{Rational(0), Rational(0)},
                                                {Rational(4), Rational(0)},
                                                {Rational(6), Rational(4)}});
  return InstanceDocument(
      PerformanceProfilesInstance(std::move(profiles), Rational(5), Rational(5, 2)));
}

InstanceDocument four_trees() {
  std::vector<EvaluationTree> trees;
  trees.push_back(EvaluationNode::internal(
      Rational(2), {{Rational(7, 40), EvaluationNode::leaf(Rational(10, 3))},
                    {Rational(33, 40), EvaluationNode::leaf(Rational(5, 99))}}));
  trees.push_back(EvaluationNode::internal(
      Rational(3), {{Rational(1, 2), EvaluationNode::leaf(Rational(3))},
                    {Rational(1, 2), EvaluationNode::leaf(Rational(0))}}));
  trees.push_back(EvaluationNode::internal(
      Rational(2), {{Rational(1, 2), EvaluationNode::leaf(Rational(2))},
                    {Rational(1, 2), EvaluationNode::leaf(Rational(0))}}));
  trees.push_back(EvaluationNode::leaf(Rational(1)));
  return InstanceDocument(ActionEvaluationInstance(
      std::move(trees), Rational(5), {"a", "b", "c", "baseline"}));
}

InstanceDocument three_states() {
  return InstanceDocument(DisambiguationInstance(
      {"s1", "s2", "s3"},
      {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
      {Rational(2), Rational(1), Rational(0)},
      {
          {{0}, {0, 1, 2}},
          {{0, 1}, {1, 2}},
          {{0, 1}, {0, 1, 2}},
      },
      2, Rational(5, 12)));
}

InstanceDocument knapsack(std::vector<KnapsackItem> items, std::int64_t capacity,
                          std::int64_t target) {
  return InstanceDocument(KnapsackInstance(std::move(items), capacity, target));
}

InstanceDocument two_elements() {
  return InstanceDocument(SetCoverInstance({"e1", "e2"}, {{0}, {1}}, 2));
}

InstanceDocument uncoverable() {
  return InstanceDocument(SetCoverInstance({"e1", "e2"}, {{0}}, 1));
}

InstanceDocument single_clause() {
  return InstanceDocument(SsatInstance(1, {{{LiteralKind::Chance, 1, false}}}));
}

InstanceDocument contradiction() {
  return InstanceDocument(SsatInstance(1, {{{LiteralKind::Chance, 1, false}},
                                           {{LiteralKind::Chance, 1, true}}}));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const std::vector<std::pair<std::string, InstanceDocument>> fixtures = {
      {"pp_three_profiles.json", three_profiles()},
      {"ae_four_trees.json", four_trees()},
      {"sd_three_states.json", three_states()},
      {"ks_two_items.json", knapsack({{1, 2}, {2, 3}}, 2, 3)},
      {"ks_single_item.json", knapsack({{2, 3}}, 2, 3)},
      {"ks_unit_item.json", knapsack({{1, 1}}, 1, 1)},
      {"sc_two_elements.json", two_elements()},
      {"sc_uncoverable.json", uncoverable()},
      {"ssat_single_clause.json", single_clause()},
      {"ssat_contradiction.json", contradiction()},
  };
  for (const auto& [name, doc] : fixtures) store_instance(doc, dir / name);
  std::cout << "wrote " << fixtures.size() << " fixtures to " << dir.string() << "\n";
  return 0;
}
