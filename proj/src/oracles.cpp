#include "metareason/oracles.hpp"

#include <cstddef>
#include <exception>
#include <utility>

#include "metareason/ae_solver.hpp"
#include "metareason/errors.hpp"
#include "metareason/reductions.hpp"
#include "metareason/sd_solver.hpp"

namespace metareason::oracles {

namespace {

void check_knapsack_size(const KnapsackInstance& instance) {
  if (instance.items.size() > 30)
    throw DomainError("items: subset scan supports at most 30 items");
}

bool subset_feasible(const KnapsackInstance& instance, std::uint64_t mask) {
  __int128 cost = 0, value = 0;
  for (std::size_t i = 0; i < instance.items.size(); ++i)
    if (mask >> i & 1) {
      cost += instance.items[i].cost;
      value += instance.items[i].value;
    }
  return cost <= instance.capacity && value >= instance.target;
}

}  // namespace

bool solve_knapsack(const KnapsackInstance& instance) {
  check_knapsack_size(instance);
  const auto subsets =
      static_cast<long long>(std::uint64_t(1) << instance.items.size());
  bool found = false;
#pragma omp parallel for schedule(static) reduction(|| : found)
  for (long long mask = 0; mask < subsets; ++mask)
    found = found || subset_feasible(instance, static_cast<std::uint64_t>(mask));
  return found;
}

bool solve_knapsack_serial(const KnapsackInstance& instance) {
  check_knapsack_size(instance);
  const std::uint64_t subsets = std::uint64_t(1) << instance.items.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    if (subset_feasible(instance, mask)) return true;
  return false;
}

namespace {

bool cover_search(const std::vector<std::uint64_t>& masks, std::uint64_t full,
                  std::size_t next, std::int64_t remaining, std::uint64_t covered) {
  if (covered == full) return true;
  if (remaining == 0 || next == masks.size()) return false;
  return cover_search(masks, full, next + 1, remaining - 1, covered | masks[next]) ||
         cover_search(masks, full, next + 1, remaining, covered);
}

}  // namespace

bool solve_setcover(const SetCoverInstance& instance) {
  const std::size_t u = instance.universe.size();
  if (u > 62)
    throw DomainError("universe: selection scan supports at most 62 elements");
  std::vector<std::uint64_t> masks;
  masks.reserve(instance.subsets.size());
  for (const auto& subset : instance.subsets) {
    std::uint64_t mask = 0;
    for (std::size_t idx : subset) mask |= std::uint64_t(1) << idx;
    masks.push_back(mask);
  }
  const std::uint64_t full = u == 0 ? 0 : (std::uint64_t(1) << u) - 1;
  return cover_search(masks, full, 0, instance.bound, 0);
}

namespace {

bool clauses_satisfied(const SsatInstance& instance, unsigned xmask, unsigned ymask) {
  for (const auto& clause : instance.clauses) {
    bool satisfied = false;
    for (const auto& lit : clause) {
      const unsigned mask = lit.kind == LiteralKind::Choice ? xmask : ymask;
      if (bool(mask >> (lit.index - 1) & 1) != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

Rational ssat_value(const SsatInstance& instance, int i, unsigned xmask, unsigned ymask) {
  if (i == instance.variables)
    return clauses_satisfied(instance, xmask, ymask) ? Rational(1) : Rational(0);
  const unsigned bit = unsigned(1) << i;
  Rational best(0);
  for (unsigned choice : {0u, bit}) {
    const Rational branch =
        Rational(1, 2) * (ssat_value(instance, i + 1, xmask | choice, ymask) +
                          ssat_value(instance, i + 1, xmask | choice, ymask | bit));
    if (branch > best) best = branch;
  }
  return best;
}

}  // namespace

Rational solve_ssat(const SsatInstance& instance) {
  if (instance.variables > 15)
    throw DomainError("variables: game-tree expansion supports at most 15 variable pairs");
  return ssat_value(instance, 0, 0, 0);
}

bool decide_ssat(const SsatInstance& instance) {
  return solve_ssat(instance) >= Rational(1, 2);
}

std::string_view reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::KnapsackToProfiles: return "knapsack-to-profiles";
    case ReductionKind::KnapsackToEvaluation: return "knapsack-to-evaluation";
    case ReductionKind::SetCoverToDisambiguation: return "setcover-to-disambiguation";
    case ReductionKind::SsatToDisambiguation: return "ssat-to-disambiguation";
  }
  throw DomainError("unknown reduction kind");
}

ReductionKind reduction_from_name(std::string_view name) {
  for (ReductionKind kind :
       {ReductionKind::KnapsackToProfiles, ReductionKind::KnapsackToEvaluation,
        ReductionKind::SetCoverToDisambiguation, ReductionKind::SsatToDisambiguation})
    if (reduction_name(kind) == name) return kind;
  throw ParseError("unknown reduction '" + std::string(name) + "'");
}

DocumentKind reduction_source_kind(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::KnapsackToProfiles:
    case ReductionKind::KnapsackToEvaluation: return DocumentKind::Knapsack;
    case ReductionKind::SetCoverToDisambiguation: return DocumentKind::SetCover;
    case ReductionKind::SsatToDisambiguation: return DocumentKind::Ssat;
  }
  throw DomainError("unknown reduction kind");
}

ReductionReport verify_reduction(ReductionKind kind, const InstanceDocument& source) {
  ReductionReport report;
  report.kind = kind;
  switch (kind) {
    case ReductionKind::KnapsackToProfiles: {
      const auto& knapsack = source.as<KnapsackInstance>();
      report.source_answer = solve_knapsack(knapsack);
      const auto produced = reductions::knapsack_to_pp(knapsack);
      auto best = pp::optimal_allocation(produced);
      report.target_answer = best.value >= produced.target;
      report.target_value = best.value;
      report.allocation = std::move(best);
      break;
    }
    case ReductionKind::KnapsackToEvaluation: {
      const auto& knapsack = source.as<KnapsackInstance>();
      report.source_answer = solve_knapsack(knapsack);
      const auto produced = reductions::knapsack_to_ae(knapsack);
      report.first_step_optimal = ae::first_step_optimal_set(produced);
      report.target_answer = !report.first_step_optimal.empty() &&
                             report.first_step_optimal.front() == 0;
      break;
    }
    case ReductionKind::SetCoverToDisambiguation: {
      const auto& setcover = source.as<SetCoverInstance>();
      report.source_answer = solve_setcover(setcover);
      const auto produced = reductions::setcover_to_sd(setcover);
      auto solved = sd::optimal_expected_utility(produced);
      report.target_answer = solved.value >= produced.target;
      report.target_value = std::move(solved.value);
      break;
    }
    case ReductionKind::SsatToDisambiguation: {
      const auto& ssat = source.as<SsatInstance>();
      report.source_answer = decide_ssat(ssat);
      const auto gadget = reductions::ssat_to_sd(ssat);
      auto solved = sd::optimal_expected_utility(gadget.instance);
      report.target_answer = solved.value >= gadget.instance.target;
      report.target_value = std::move(solved.value);
      break;
    }
  }
  report.equivalent = report.source_answer == report.target_answer;
  return report;
}

std::vector<ReductionReport> verify_corpus(ReductionKind kind,
                                           const std::vector<InstanceDocument>& corpus) {
  std::vector<ReductionReport> reports(corpus.size());
  std::exception_ptr failure;
  const auto count = static_cast<long long>(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] =
          verify_reduction(kind, corpus[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(verify_corpus_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::vector<ReductionReport> verify_corpus_serial(
    ReductionKind kind, const std::vector<InstanceDocument>& corpus) {
  std::vector<ReductionReport> reports;
  reports.reserve(corpus.size());
  for (const auto& document : corpus) reports.push_back(verify_reduction(kind, document));
  return reports;
}

}  // namespace metareason::oracles
