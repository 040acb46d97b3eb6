//===- SccSystem.h - Constraints local to one component ---------*- C++ -*-===//
//
// The inequalities of a single strongly connected component after the values
// of already-solved variables have been folded into the constants. Variables
// are renumbered 0..n-1 following VarId order.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_SCCSYSTEM_H
#define FIRWINE_SCCSYSTEM_H

#include "firwine/Constraint.h"
#include "firwine/DepGraph.h"

namespace firwine {

/// lhs >= constant + sum(coeff * x), indices local to the component.
struct LocalIneq {
  std::uint32_t lhs = 0;
  std::uint32_t label = 0;
  Int constant = 0;
  std::vector<std::pair<std::uint32_t, Int>> coeffs; // sorted by index
};

struct SccSystem {
  std::vector<VarId> vars;
  std::vector<LocalIneq> ineqs; // (lhs, label) order

  std::size_t size() const { return vars.size(); }
  /// First violated inequality in (lhs, label) order, or null.
  const LocalIneq *firstViolated(std::span<const Int> values) const;
  bool satisfiedBy(std::span<const Int> values) const {
    return firstViolated(values) == nullptr;
  }
};

/// Restricts a conjunctive system to one component. Variables outside it must
/// have a value in `solved` (MissingSubstitution otherwise); a 2^v addend with
/// v inside the component raises UnsupportedDynamicShift.
SccSystem restrictToComponent(const FirwineSystem &sys,
                              std::span<const VarId> component,
                              std::span<const std::optional<Int>> solved);

/// The whole conjunctive system as a single block (every variable local).
SccSystem wholeSystem(const FirwineSystem &sys);

} // namespace firwine

#endif // FIRWINE_SCCSYSTEM_H
