#pragma once

#include "metareason/evaluation_tree.hpp"
#include "metareason/rational.hpp"

namespace testoracle {

/// Reference optimum for budgeted evaluation, by direct recursion over node
/// copies with no memoization or tree flattening. Kept independent of the
/// library solver so the two can check each other.
metareason::Rational ae_value(const metareason::ActionEvaluationInstance& instance);

/// Reference expected value of a single tree (recursive weighted mean).
metareason::Rational ae_expected(const metareason::EvaluationNode& node);

}  // namespace testoracle
