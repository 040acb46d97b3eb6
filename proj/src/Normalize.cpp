//===- Normalize.cpp - Rewrite width expressions into min-inequalities ---===//

#include "firwine/Normalize.h"

#include <algorithm>

namespace firwine {

namespace {

// max over the outer list of min over each inner list.
using MaxOfMin = std::vector<std::vector<LinearTerm>>;

void pushUnique(std::vector<LinearTerm> &alts, const LinearTerm &t) {
  if (std::find(alts.begin(), alts.end(), t) == alts.end())
    alts.push_back(t);
}

void pushUnique(MaxOfMin &outer, std::vector<LinearTerm> alts) {
  if (std::find(outer.begin(), outer.end(), alts) == outer.end())
    outer.push_back(std::move(alts));
}

MaxOfMin lower(const WidthExpr &e) {
  switch (e.kind()) {
  case WidthExpr::Kind::Var:
    return {{LinearTerm::variable(e.varId())}};
  case WidthExpr::Kind::Const:
    return {{LinearTerm(e.value())}};
  case WidthExpr::Kind::Exp2: {
    const WidthExpr &arg = e.lhs();
    if (arg.kind() == WidthExpr::Kind::Const)
      return {{LinearTerm(pow2(arg.value()))}};
    if (arg.kind() == WidthExpr::Kind::Var)
      return {{LinearTerm::exponential(arg.varId())}};
    throw Error(ErrorKind::MalformedExpr,
                "2^w is only supported for a variable or constant w");
  }
  case WidthExpr::Kind::Max: {
    MaxOfMin r = lower(e.lhs());
    for (auto &alts : lower(e.rhs()))
      pushUnique(r, std::move(alts));
    return r;
  }
  case WidthExpr::Kind::Min: {
    MaxOfMin a = lower(e.lhs()), b = lower(e.rhs()), r;
    for (const auto &p : a)
      for (const auto &q : b) {
        std::vector<LinearTerm> alts = p;
        for (const auto &t : q)
          pushUnique(alts, t);
        pushUnique(r, std::move(alts));
      }
    return r;
  }
  case WidthExpr::Kind::Add: {
    MaxOfMin a = lower(e.lhs()), b = lower(e.rhs()), r;
    for (const auto &p : a)
      for (const auto &q : b) {
        std::vector<LinearTerm> alts;
        for (const auto &s : p)
          for (const auto &t : q)
            pushUnique(alts, s + t);
        pushUnique(r, std::move(alts));
      }
    return r;
  }
  }
  throw Error(ErrorKind::Internal, "bad width expression");
}

} // namespace

std::vector<MinInequality> normalize(VarId lhs, const WidthExpr &rhs) {
  std::vector<MinInequality> out;
  std::uint32_t label = 1;
  for (auto &alts : lower(rhs))
    out.push_back(MinInequality{lhs, std::move(alts), label++});
  return out;
}

void addConstraint(FirwineSystem &sys, VarId lhs, const WidthExpr &rhs) {
  for (auto &m : normalize(lhs, rhs))
    sys.add(lhs, std::move(m.alternatives));
}

} // namespace firwine
