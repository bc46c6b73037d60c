#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metareason/document.hpp"
#include "metareason/pp_solver.hpp"
#include "metareason/rational.hpp"

namespace metareason::oracles {

/// Exhaustive subset scan. Guarded to at most 30 items.
bool solve_knapsack(const KnapsackInstance& instance);
bool solve_knapsack_serial(const KnapsackInstance& instance);

/// Tries every selection of at most `bound` subsets. Guarded to universes of
/// at most 62 elements.
bool solve_setcover(const SetCoverInstance& instance);

/// Exact satisfaction probability under optimal play, by full game-tree
/// expansion. Guarded to at most 15 variable pairs.
Rational solve_ssat(const SsatInstance& instance);

/// True when the optimal satisfaction probability reaches 1/2.
bool decide_ssat(const SsatInstance& instance);

enum class ReductionKind {
  KnapsackToProfiles,
  KnapsackToEvaluation,
  SetCoverToDisambiguation,
  SsatToDisambiguation,
};

std::string_view reduction_name(ReductionKind kind);
ReductionKind reduction_from_name(std::string_view name);
DocumentKind reduction_source_kind(ReductionKind kind);

/// Outcome of checking one reduction empirically: the source instance is
/// decided by its oracle, the produced instance by the real solver, and the
/// two answers are compared.
struct ReductionReport {
  ReductionKind kind = ReductionKind::KnapsackToProfiles;
  bool source_answer = false;
  bool target_answer = false;
  bool equivalent = false;

  /// Optimal value of the produced instance (expected utility or summed
  /// profile value). Absent for the evaluation gadget, whose answer is about
  /// the first action rather than a value threshold.
  std::optional<Rational> target_value;
  /// Witness allocation for the profiles gadget.
  std::optional<pp::Allocation> allocation;
  /// Trees that are optimal first evaluations for the evaluation gadget.
  std::vector<std::size_t> first_step_optimal;
};

/// Runs `kind` on the instance held by `source` and checks that the produced
/// instance's answer matches the oracle answer for the source. Throws
/// DomainError when the document holds the wrong kind of instance.
ReductionReport verify_reduction(ReductionKind kind, const InstanceDocument& source);

/// verify_reduction over a whole corpus, in parallel. Order of reports
/// matches the input order.
std::vector<ReductionReport> verify_corpus(ReductionKind kind,
                                           const std::vector<InstanceDocument>& corpus);
std::vector<ReductionReport> verify_corpus_serial(ReductionKind kind,
                                                  const std::vector<InstanceDocument>& corpus);

}  // namespace metareason::oracles
