//===- Solver.h - Least solutions of width constraints ----------*- C++ -*-===//
//
// Components of the dependency graph are solved from the last one back to
// the first, each after substituting the widths already found. Trivial
// components take the maximum of their constants, nonexpansive ones go
// through the maximal Floyd-Warshall, expansive ones through branch and
// bound. Systems with min() are split into min-free disjuncts whose least
// solutions are combined by pointwise minimum.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_SOLVER_H
#define FIRWINE_SOLVER_H

#include "firwine/Constraint.h"

#include <iosfwd>

namespace firwine {

enum class UnsatReason {
  PositiveCycle,
  BabExhausted,
  BoundConflict,
  ConstantConflict,
  AllDisjunctsUnsat,
};

/// Stable identifiers used in JSON output: "positive-cycle", ...
const char *toString(UnsatReason reason);

struct SolveResult {
  bool sat = false;
  Assignment least;
  UnsatReason reason = UnsatReason::AllDisjunctsUnsat;
  std::vector<VarId> scc; // the component that failed
  std::string detail;
};

struct SolveOptions {
  std::ostream *trace = nullptr;
};

/// Replaces every occurrence of a solved variable on a right-hand side by its
/// value (2^v addends fold to constants as well).
LinearTerm substitute(const LinearTerm &t,
                      std::span<const std::optional<Int>> solved);
FirwineSystem substitute(const FirwineSystem &sys,
                         std::span<const std::optional<Int>> solved);

/// Throws NotConjunctive for systems with min().
SolveResult inferWidthConjunctive(const FirwineSystem &sys,
                                  const SolveOptions &opts = {});

SolveResult inferWidth(const FirwineSystem &sys, const SolveOptions &opts = {});

/// Checks whose bound is below the value of their right-hand side.
std::vector<const ConstantCheck *>
failedChecks(std::span<const ConstantCheck> checks, std::span<const Int> a);

} // namespace firwine

#endif // FIRWINE_SOLVER_H
