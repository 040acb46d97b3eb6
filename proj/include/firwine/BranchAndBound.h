//===- BranchAndBound.h - Expansive component solver ------------*- C++ -*-===//
//
// Every solution of a satisfiable expansive component is bounded. Bounds come
// from composing inequalities along a cycle into x >= a + b*x with b > 1; the
// least solution is then searched by bisecting the box [lb, ub].
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_BRANCHANDBOUND_H
#define FIRWINE_BRANCHANDBOUND_H

#include "firwine/SccSystem.h"

#include <functional>

namespace firwine {

/// src >= a + b * dst, obtained by chaining inequalities and dropping the
/// variables off the path (all coefficients are nonnegative).
struct PathIneq {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  Int a = 0;
  Int b = 1;
};

/// Appends the edge q.lhs -> w of inequality q to p (p.dst must be q.lhs).
PathIneq extend(const PathIneq &p, const LocalIneq &q, std::uint32_t w);

/// Empty optional when some derived bound is negative (no solution).
std::optional<std::vector<Int>> computeUpperBounds(const SccSystem &scc);

/// max(0, constants of the inequalities) per variable.
std::vector<Int> lowerBounds(const SccSystem &scc);

enum class BabRule {
  NotLbLeUb,
  EqSat,
  EqUnsat,
  NeqTrue,
  NeqFalseRhs1,
  NeqFalseRhs2,
  NeqFalseLhs,
};

const char *toString(BabRule rule);

struct BabEvent {
  BabRule rule;
  std::vector<Int> lb, ub;
  Int measure = 0;        // sum(ub - lb) of this call
  Int parentMeasure = -1; // of the call it was reached from, -1 at the root
};

using BabObserver = std::function<void(const BabEvent &)>;

/// Least solution of scc inside [lb, ub], if any.
std::optional<Assignment> branchAndBound(const SccSystem &scc,
                                         std::vector<Int> lb,
                                         std::vector<Int> ub,
                                         const BabObserver &observer = {});

} // namespace firwine

#endif // FIRWINE_BRANCHANDBOUND_H
