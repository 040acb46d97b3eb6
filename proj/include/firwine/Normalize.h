//===- Normalize.h - Rewrite width expressions into min-inequalities -*- C++ -*-===//
//
// lhs >= rhs, with rhs built from +, min, max and 2^, becomes a conjunction of
// inequalities lhs >= min(t1, ..., tk). Addition is distributed over min and
// max, min over max, and a top-level max splits into separate inequalities.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_NORMALIZE_H
#define FIRWINE_NORMALIZE_H

#include "firwine/Constraint.h"

namespace firwine {

/// Inequalities carry local labels 1..k; FirwineSystem::add relabels.
std::vector<MinInequality> normalize(VarId lhs, const WidthExpr &rhs);

/// normalize() followed by adding every result to sys.
void addConstraint(FirwineSystem &sys, VarId lhs, const WidthExpr &rhs);

} // namespace firwine

#endif // FIRWINE_NORMALIZE_H
