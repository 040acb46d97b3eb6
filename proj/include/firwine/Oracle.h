//===- Oracle.h - Reference least-solution computations ---------*- C++ -*-===//
//
// Two slow but simple ways to find least solutions, used to cross-check the
// solver: ascending fixpoint iteration and bounded exhaustive search.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_ORACLE_H
#define FIRWINE_ORACLE_H

#include "firwine/Constraint.h"

#include <functional>

namespace firwine {

enum class OracleStatus { Sat, Diverged, NoSolutionInBox };

struct OracleResult {
  OracleStatus status = OracleStatus::Sat;
  Assignment values; // Sat only
  Int limit = 0;     // cutoff or bound for the other outcomes
};

/// Iterates a := max(a, F(a)) from 0, where
/// F(a)_i = max(0, max over inequalities of min over alternatives).
/// Diverged once a component exceeds cutoff. The optional observer sees each
/// iterate.
OracleResult kleeneLfp(const FirwineSystem &sys, Int cutoff,
                       const std::function<void(const Assignment &)>
                           &observer = {});

/// Least solution inside [0, bound]^n by lexicographic depth-first
/// enumeration. Subtrees are skipped only when no completion can satisfy the
/// system.
OracleResult exhaustiveLeast(const FirwineSystem &sys, Int bound);

} // namespace firwine

#endif // FIRWINE_ORACLE_H
