//===- Solver.cpp - Least solutions of width constraints -----------------===//

#include "firwine/Solver.h"
#include "firwine/BranchAndBound.h"
#include "firwine/DepGraph.h"
#include "firwine/MaxFloydWarshall.h"
#include "firwine/SccSystem.h"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace firwine {

const char *toString(UnsatReason reason) {
  switch (reason) {
  case UnsatReason::PositiveCycle:
    return "positive-cycle";
  case UnsatReason::BabExhausted:
    return "bab-exhausted";
  case UnsatReason::BoundConflict:
    return "bound-conflict";
  case UnsatReason::ConstantConflict:
    return "constant-conflict";
  case UnsatReason::AllDisjunctsUnsat:
    return "all-disjuncts-unsat";
  }
  return "unsat";
}

LinearTerm substitute(const LinearTerm &t,
                      std::span<const std::optional<Int>> solved) {
  auto known = [&](VarId v) -> const std::optional<Int> & {
    static const std::optional<Int> none;
    return v.index < solved.size() ? solved[v.index] : none;
  };
  LinearTerm r(t.constant());
  for (auto [v, a] : t.coeffs()) {
    if (const auto &x = known(v))
      r.addConstant(checkedMul(a, *x));
    else
      r.addVariable(v, a);
  }
  for (auto [v, a] : t.expAddends()) {
    if (const auto &x = known(v))
      r.addConstant(checkedMul(a, pow2(*x)));
    else
      r.addExponential(v, a);
  }
  return r;
}

FirwineSystem substitute(const FirwineSystem &sys,
                         std::span<const std::optional<Int>> solved) {
  FirwineSystem r = sys.emptyCopy();
  sys.forEachInequality([&](const MinInequality &m) {
    MinInequality copy{m.lhs, {}, m.label};
    for (const auto &t : m.alternatives)
      copy.alternatives.push_back(substitute(t, solved));
    r.addLabeled(std::move(copy));
  });
  return r;
}

namespace {

std::string joinNames(const FirwineSystem &sys, std::span<const VarId> vars) {
  std::string s;
  for (VarId v : vars) {
    if (!s.empty())
      s += ", ";
    s += sys.name(v);
  }
  return s;
}

std::string vectorText(std::span<const Int> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i];
  os << ')';
  return os.str();
}

SolveResult unsat(UnsatReason reason, std::vector<VarId> scc,
                  std::string detail) {
  SolveResult r;
  r.reason = reason;
  r.scc = std::move(scc);
  r.detail = std::move(detail);
  return r;
}

} // namespace

SolveResult inferWidthConjunctive(const FirwineSystem &sys,
                                  const SolveOptions &opts) {
  DepGraph g = buildGraph(sys);
  SccDecomposition d = tarjanScc(g);
  std::ostream *trace = opts.trace;
  std::vector<std::optional<Int>> solved(sys.numVariables());

  for (std::size_t c = d.components.size(); c-- > 0;) {
    const auto &comp = d.components[c];
    bool trivial = isTrivial(g, d, c);
    bool expansive = !trivial && isExpansive(g, d, c);
    SccSystem local = restrictToComponent(sys, comp, solved);
    if (trace)
      *trace << "scc " << c + 1 << " {" << joinNames(sys, comp) << "}: "
             << (trivial ? "trivial"
                         : expansive ? "expansive" : "nonexpansive")
             << '\n';

    Assignment u;
    if (trivial) {
      u = lowerBounds(local);
    } else if (!expansive) {
      NonexpansiveProblem p = buildWeightedGraph(local);
      MaxFwResult fw = maxFloydWarshall(p.graph);
      if (fw.positiveCycle()) {
        std::vector<VarId> onCycle;
        for (auto i : fw.cycle)
          onCycle.push_back(local.vars[i]);
        if (trace)
          *trace << "  inferSCC: nontrivial-maxfw-unsat\n";
        return unsat(UnsatReason::PositiveCycle, comp,
                     "positive cycle through " + joinNames(sys, onCycle));
      }
      if (trace) {
        *trace << "  inferSCC: nontrivial-maxfw-sat, v = " << vectorText(p.v)
               << ", W =\n";
        printMatrix(*trace, *fw.matrix);
      }
      u = leastSolutionNonexpansive(*fw.matrix, p.v);
    } else {
      std::vector<Int> lb = lowerBounds(local);
      auto ub = computeUpperBounds(local);
      if (trace)
        *trace << "  lb = " << vectorText(lb) << ", ub = "
               << (ub ? vectorText(*ub) : std::string("negative")) << '\n';
      if (!ub)
        return unsat(UnsatReason::BoundConflict, comp,
                     "a derived upper bound is negative");
      for (std::size_t i = 0; i < lb.size(); ++i)
        if (lb[i] > (*ub)[i])
          return unsat(UnsatReason::BoundConflict, comp,
                       "lower bounds " + vectorText(lb) +
                           " exceed upper bounds " + vectorText(*ub));
      BabObserver observer;
      if (trace)
        observer = [trace](const BabEvent &e) {
          *trace << "  " << toString(e.rule) << " lb = " << vectorText(e.lb)
                 << " ub = " << vectorText(e.ub) << '\n';
        };
      auto theta = branchAndBound(local, lb, *ub, observer);
      if (!theta)
        return unsat(UnsatReason::BabExhausted, comp,
                     "no solution within lb = " + vectorText(lb) +
                         ", ub = " + vectorText(*ub));
      u = std::move(*theta);
    }
    if (trace)
      *trace << "  least = " << vectorText(u) << '\n';
    for (std::size_t i = 0; i < comp.size(); ++i)
      solved[local.vars[i].index] = u[i];
  }

  SolveResult r;
  r.sat = true;
  r.least.reserve(solved.size());
  for (const auto &x : solved)
    r.least.push_back(*x);
  if (!satisfies(sys, r.least).ok())
    throw Error(ErrorKind::Internal, "solver produced a non-solution");
  return r;
}

SolveResult inferWidth(const FirwineSystem &sys, const SolveOptions &opts) {
  if (sys.isConjunctive())
    return inferWidthConjunctive(sys, opts);

  DisjunctEnumerator disjuncts(sys);
  std::optional<Assignment> best;
  std::size_t index = 0;
  while (auto d = disjuncts.next()) {
    if (opts.trace)
      *opts.trace << "disjunct " << index << '\n';
    ++index;
    SolveResult r = inferWidthConjunctive(*d, opts);
    if (!r.sat)
      continue;
    best = best ? pointwiseMin(*best, r.least) : std::move(r.least);
  }
  if (!best)
    return unsat(UnsatReason::AllDisjunctsUnsat, {},
                 "all " + std::to_string(index) + " disjuncts are unsatisfiable");
  if (!satisfies(sys, *best).ok())
    throw Error(ErrorKind::Internal,
                "pointwise minimum of disjunct solutions is not a solution");
  SolveResult r;
  r.sat = true;
  r.least = std::move(*best);
  return r;
}

std::vector<const ConstantCheck *>
failedChecks(std::span<const ConstantCheck> checks, std::span<const Int> a) {
  std::vector<const ConstantCheck *> failed;
  for (const auto &c : checks)
    if (c.bound < evaluate(c.rhs, a))
      failed.push_back(&c);
  return failed;
}

} // namespace firwine
