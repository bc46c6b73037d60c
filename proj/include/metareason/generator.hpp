#pragma once

#include <cstdint>

#include "metareason/document.hpp"

namespace metareason::gen {

/// Deterministic 64-bit generator with identical output on every platform,
/// which the standard library distributions do not promise. State advances by
/// a fixed odd constant; output is the state put through two xor-multiply
/// mixing rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform draw from [0, bound), bias removed by rejection. `bound` > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform draw from [lo, hi], inclusive on both ends.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  bool coin();

 private:
  std::uint64_t state_;
};

/// Knobs for random instances. `size` caps the leading dimension (items,
/// profiles, trees, states, universe elements, variable pairs), `width` the
/// secondary one (entry magnitude, segments, subsets, clauses, queries),
/// `bound` the integer budget scale. The exact draws per kind are documented
/// with the implementation and are part of the tool's stable behavior: a
/// (kind, seed) pair always produces the same instance.
struct GeneratorConfig {
  DocumentKind kind = DocumentKind::Knapsack;
  std::uint64_t seed = 0;
  int size = 3;
  int width = 4;
  int bound = 4;
  bool concave = false;     // profiles: force nonincreasing slopes
  bool fractional = false;  // profiles: quarter-step times and budget
};

InstanceDocument generate(const GeneratorConfig& config);

}  // namespace metareason::gen
