// Command line front end. Subcommands read instance files, print a JSON
// report to stdout (or write an instance file), and exit 0 on success, 2 on
// any input problem, 3 when `verify` finds a reduction mismatch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metareason/ae_solver.hpp"
#include "metareason/errors.hpp"
#include "metareason/generator.hpp"
#include "metareason/io.hpp"
#include "metareason/oracles.hpp"
#include "metareason/pp_solver.hpp"
#include "metareason/reductions.hpp"
#include "metareason/sd_solver.hpp"

namespace {

using json = nlohmann::json;
using namespace metareason;

json rational_json(const Rational& r) { return r.str(); }

json rational_list(const std::vector<Rational>& values) {
  json list = json::array();
  for (const auto& v : values) list.push_back(rational_json(v));
  return list;
}

json one_based(const std::vector<std::size_t>& indices) {
  json list = json::array();
  for (std::size_t i : indices) list.push_back(i + 1);
  return list;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json ae_policy_json(const ae::AePolicy& policy) {
  json node;
  node["evaluate"] = policy.evaluate ? json(*policy.evaluate + 1) : json(nullptr);
  json outcomes = json::array();
  for (const auto& outcome : policy.outcomes) outcomes.push_back(ae_policy_json(outcome));
  node["outcomes"] = std::move(outcomes);
  return node;
}

json sd_policy_json(const sd::SdPolicy& policy) {
  json node;
  node["query"] = policy.query ? json(*policy.query + 1) : json(nullptr);
  json branches = json::array();
  for (const auto& [answer, plan] : policy.on_answer) {
    json branch;
    branch["answer"] = answer + 1;
    branch["plan"] = sd_policy_json(plan);
    branches.push_back(std::move(branch));
  }
  node["on_answer"] = std::move(branches);
  return node;
}

struct SolveOptions {
  bool approx = false;
  sd::AnswerModel model = sd::AnswerModel::Persistent;
};

int run_solve(const std::string& path, const SolveOptions& options) {
  const auto doc = load_instance(path);
  json report;
  report["kind"] = std::string(kind_name(doc.kind()));
  switch (doc.kind()) {
    case DocumentKind::PerformanceProfiles: {
      const auto& instance = doc.as<PerformanceProfilesInstance>();
      const auto best = pp::optimal_allocation(instance);
      report["value"] = rational_json(best.value);
      report["allocation"] = rational_list(best.times);
      report["target"] = rational_json(instance.target);
      report["decision"] = best.value >= instance.target;
      if (options.approx) report["approx_value"] = best.value.approx();
      break;
    }
    case DocumentKind::ActionEvaluation: {
      const auto& instance = doc.as<ActionEvaluationInstance>();
      const auto solved = ae::optimal_policy_value(instance);
      report["value"] = rational_json(solved.value);
      report["policy"] = ae_policy_json(solved.policy);
      json first = json::array();
      for (const auto& v : ae::first_step_values(instance))
        first.push_back(v ? rational_json(*v) : json(nullptr));
      report["first_step_values"] = std::move(first);
      report["first_step_optimal"] = one_based(ae::first_step_optimal_set(instance));
      if (options.approx) report["approx_value"] = solved.value.approx();
      break;
    }
    case DocumentKind::StateDisambiguation: {
      const auto& instance = doc.as<DisambiguationInstance>();
      const auto solved = sd::optimal_expected_utility(instance, options.model);
      report["value"] = rational_json(solved.value);
      report["policy"] = sd_policy_json(solved.policy);
      report["first_query_values"] =
          rational_list(sd::first_query_values(instance, options.model));
      report["target"] = rational_json(instance.target);
      report["decision"] = solved.value >= instance.target;
      report["answer_model"] =
          options.model == sd::AnswerModel::Persistent ? "persistent" : "resampled";
      if (options.approx) report["approx_value"] = solved.value.approx();
      break;
    }
    default:
      throw DomainError("solve expects a deliberation instance; use 'oracle' for " +
                        std::string(kind_name(doc.kind())) + " inputs");
  }
  emit(report);
  return 0;
}

int run_oracle(const std::string& path, const std::string& step_text, bool approx) {
  const auto doc = load_instance(path);
  json report;
  report["kind"] = std::string(kind_name(doc.kind()));
  switch (doc.kind()) {
    case DocumentKind::Knapsack:
      report["solvable"] = oracles::solve_knapsack(doc.as<KnapsackInstance>());
      break;
    case DocumentKind::SetCover:
      report["coverable"] = oracles::solve_setcover(doc.as<SetCoverInstance>());
      break;
    case DocumentKind::Ssat: {
      const auto value = oracles::solve_ssat(doc.as<SsatInstance>());
      report["value"] = rational_json(value);
      report["decision"] = value >= Rational(1, 2);
      if (approx) report["approx_value"] = value.approx();
      break;
    }
    case DocumentKind::PerformanceProfiles: {
      const auto step = Rational::from_string(step_text);
      const auto value = pp::grid_oracle(doc.as<PerformanceProfilesInstance>(), step);
      report["grid_value"] = rational_json(value);
      report["step"] = rational_json(step);
      if (approx) report["approx_grid_value"] = value.approx();
      break;
    }
    default:
      throw DomainError("no reference oracle for " + std::string(kind_name(doc.kind())) +
                        " instances; use 'solve'");
  }
  emit(report);
  return 0;
}

int run_reduce(const std::string& name, const std::string& in, const std::string& out) {
  const auto kind = oracles::reduction_from_name(name);
  const auto doc = load_instance(in);
  switch (kind) {
    case oracles::ReductionKind::KnapsackToProfiles:
      store_instance(
          InstanceDocument(reductions::knapsack_to_pp(doc.as<KnapsackInstance>())), out);
      break;
    case oracles::ReductionKind::KnapsackToEvaluation:
      store_instance(
          InstanceDocument(reductions::knapsack_to_ae(doc.as<KnapsackInstance>())), out);
      break;
    case oracles::ReductionKind::SetCoverToDisambiguation:
      store_instance(
          InstanceDocument(reductions::setcover_to_sd(doc.as<SetCoverInstance>())), out);
      break;
    case oracles::ReductionKind::SsatToDisambiguation:
      store_instance(
          InstanceDocument(reductions::ssat_to_sd(doc.as<SsatInstance>()).instance), out);
      break;
  }
  return 0;
}

int run_verify(const std::string& name, const std::string& in, bool inject_fault) {
  const auto kind = oracles::reduction_from_name(name);
  auto report = oracles::verify_reduction(kind, load_instance(in));
  if (inject_fault) {
    report.target_answer = !report.target_answer;
    report.equivalent = report.source_answer == report.target_answer;
  }
  json out;
  out["reduction"] = std::string(oracles::reduction_name(report.kind));
  out["source_answer"] = report.source_answer;
  out["target_answer"] = report.target_answer;
  out["equivalent"] = report.equivalent;
  if (report.target_value) out["target_value"] = rational_json(*report.target_value);
  if (report.allocation) out["allocation"] = rational_list(report.allocation->times);
  if (report.kind == oracles::ReductionKind::KnapsackToEvaluation)
    out["first_step_optimal"] = one_based(report.first_step_optimal);
  emit(out);
  return report.equivalent ? 0 : 3;
}

int run_generate(const std::string& kind_text, const std::string& out,
                 const gen::GeneratorConfig& partial) {
  gen::GeneratorConfig config = partial;
  const auto kind = kind_from_name(kind_text);
  if (!kind) throw ParseError("unknown instance kind '" + kind_text + "'");
  config.kind = *kind;
  store_instance(gen::generate(config), out);
  return 0;
}

int run_normalize(const std::string& transform, const std::string& in,
                  const std::string& out) {
  const auto doc = load_instance(in);
  const auto& instance = doc.as<DisambiguationInstance>();
  if (transform == "uniform-prior")
    store_instance(InstanceDocument(sd::to_uniform_prior(instance)), out);
  else if (transform == "constant-utility")
    store_instance(InstanceDocument(sd::to_constant_utility(instance)), out);
  else
    throw ParseError("unknown transform '" + transform +
                     "' (expected uniform-prior or constant-utility)");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for deliberation scheduling problems"};
  app.require_subcommand(1);

  std::string in_path, out_path, reduction, transform, kind_text;
  std::string step_text = "1";
  std::string model_text = "persistent";
  bool approx = false, inject_fault = false;
  gen::GeneratorConfig config;

  auto* solve = app.add_subcommand("solve", "Solve a deliberation instance exactly");
  solve->add_option("input", in_path, "instance file")->required();
  solve->add_flag("--approx", approx, "add non-authoritative decimal fields");
  solve->add_option("--answer-model", model_text,
                    "repeat-query semantics: persistent or resampled");

  auto* oracle = app.add_subcommand("oracle", "Run the exhaustive reference solver");
  oracle->add_option("input", in_path, "instance file")->required();
  oracle->add_option("--step", step_text, "lattice step for profile instances");
  oracle->add_flag("--approx", approx, "add non-authoritative decimal fields");

  auto* reduce = app.add_subcommand("reduce", "Transform a source instance");
  reduce->add_option("reduction", reduction, "reduction name")->required();
  reduce->add_option("input", in_path, "source instance file")->required();
  reduce->add_option("output", out_path, "produced instance file")->required();

  auto* verify = app.add_subcommand("verify", "Check a reduction on one instance");
  verify->add_option("reduction", reduction, "reduction name")->required();
  verify->add_option("input", in_path, "source instance file")->required();
  verify->add_flag("--inject-fault", inject_fault,
                   "flip the produced instance's answer before comparing");

  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("kind", kind_text, "instance kind")->required();
  generate->add_option("output", out_path, "instance file to write")->required();
  generate->add_option("--seed", config.seed, "generator seed");
  generate->add_option("--size", config.size, "leading dimension cap");
  generate->add_option("--width", config.width, "secondary dimension cap");
  generate->add_option("--bound", config.bound, "budget scale");
  generate->add_flag("--concave", config.concave, "profiles: nonincreasing slopes");
  generate->add_flag("--fractional", config.fractional, "profiles: quarter steps");

  auto* normalize = app.add_subcommand("normalize", "Rewrite a disambiguation instance");
  normalize->add_option("transform", transform, "uniform-prior or constant-utility")
      ->required();
  normalize->add_option("input", in_path, "instance file")->required();
  normalize->add_option("output", out_path, "instance file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      SolveOptions options;
      options.approx = approx;
      if (model_text == "persistent")
        options.model = sd::AnswerModel::Persistent;
      else if (model_text == "resampled")
        options.model = sd::AnswerModel::Resampled;
      else
        throw ParseError("unknown answer model '" + model_text + "'");
      return run_solve(in_path, options);
    }
    if (oracle->parsed()) return run_oracle(in_path, step_text, approx);
    if (reduce->parsed()) return run_reduce(reduction, in_path, out_path);
    if (verify->parsed()) return run_verify(reduction, in_path, inject_fault);
    if (generate->parsed()) return run_generate(kind_text, out_path, config);
    if (normalize->parsed()) return run_normalize(transform, in_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
