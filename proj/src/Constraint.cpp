//===- Constraint.cpp - Width constraint data types ----------------------===//

#include "firwine/Constraint.h"

#include <algorithm>
#include <sstream>

namespace firwine {

const char *toString(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MalformedExpr:
    return "malformed expression";
  case ErrorKind::Overflow:
    return "overflow";
  case ErrorKind::NotConjunctive:
    return "not conjunctive";
  case ErrorKind::NotNonexpansive:
    return "not nonexpansive";
  case ErrorKind::UnsupportedDynamicShift:
    return "unsupported dynamic shift";
  case ErrorKind::MissingSubstitution:
    return "missing substitution";
  case ErrorKind::LengthMismatch:
    return "length mismatch";
  case ErrorKind::Syntax:
    return "syntax error";
  case ErrorKind::UnsupportedConstruct:
    return "unsupported construct";
  case ErrorKind::UnsupportedOp:
    return "unsupported operator";
  case ErrorKind::TypeMismatch:
    return "type mismatch";
  case ErrorKind::UnboundReference:
    return "unbound reference";
  case ErrorKind::Io:
    return "i/o error";
  case ErrorKind::Internal:
    return "internal error";
  }
  return "error";
}

//===----------------------------------------------------------------------===//
// LinearTerm
//===----------------------------------------------------------------------===//

namespace {

void addEntry(std::vector<LinearTerm::Entry> &entries, VarId v, Int coeff) {
  if (coeff <= 0)
    throw Error(ErrorKind::MalformedExpr,
                "coefficients of width terms must be positive");
  auto it = std::lower_bound(
      entries.begin(), entries.end(), v,
      [](const LinearTerm::Entry &e, VarId key) { return e.first < key; });
  if (it != entries.end() && it->first == v)
    it->second = checkedAdd(it->second, coeff);
  else
    entries.insert(it, {v, coeff});
}

Int lookupEntry(const std::vector<LinearTerm::Entry> &entries, VarId v) {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), v,
      [](const LinearTerm::Entry &e, VarId key) { return e.first < key; });
  return (it != entries.end() && it->first == v) ? it->second : 0;
}

} // namespace

LinearTerm LinearTerm::variable(VarId v, Int coeff) {
  LinearTerm t;
  t.addVariable(v, coeff);
  return t;
}

LinearTerm LinearTerm::exponential(VarId v, Int coeff) {
  LinearTerm t;
  t.addExponential(v, coeff);
  return t;
}

Int LinearTerm::coeff(VarId v) const { return lookupEntry(coeffs_, v); }
Int LinearTerm::expCoeff(VarId v) const { return lookupEntry(exps_, v); }

LinearTerm &LinearTerm::addConstant(Int c) {
  constant_ = checkedAdd(constant_, c);
  return *this;
}

LinearTerm &LinearTerm::addVariable(VarId v, Int coeff) {
  addEntry(coeffs_, v, coeff);
  return *this;
}

LinearTerm &LinearTerm::addExponential(VarId v, Int coeff) {
  addEntry(exps_, v, coeff);
  return *this;
}

LinearTerm &LinearTerm::operator+=(const LinearTerm &other) {
  addConstant(other.constant_);
  for (auto [v, c] : other.coeffs_)
    addEntry(coeffs_, v, c);
  for (auto [v, c] : other.exps_)
    addEntry(exps_, v, c);
  return *this;
}

//===----------------------------------------------------------------------===//
// WidthExpr
//===----------------------------------------------------------------------===//

struct WidthExpr::Node {
  Kind kind;
  VarId var;
  Int value = 0;
  std::optional<WidthExpr> a, b;
};

WidthExpr WidthExpr::var(VarId v) {
  return WidthExpr(std::make_shared<Node>(Node{Kind::Var, v, 0, {}, {}}));
}

WidthExpr WidthExpr::constant(Int c) {
  return WidthExpr(std::make_shared<Node>(Node{Kind::Const, {}, c, {}, {}}));
}

WidthExpr WidthExpr::add(WidthExpr a, WidthExpr b) {
  return WidthExpr(std::make_shared<Node>(
      Node{Kind::Add, {}, 0, std::move(a), std::move(b)}));
}

WidthExpr WidthExpr::min(WidthExpr a, WidthExpr b) {
  return WidthExpr(std::make_shared<Node>(
      Node{Kind::Min, {}, 0, std::move(a), std::move(b)}));
}

WidthExpr WidthExpr::max(WidthExpr a, WidthExpr b) {
  return WidthExpr(std::make_shared<Node>(
      Node{Kind::Max, {}, 0, std::move(a), std::move(b)}));
}

WidthExpr WidthExpr::exp2(WidthExpr a) {
  return WidthExpr(
      std::make_shared<Node>(Node{Kind::Exp2, {}, 0, std::move(a), {}}));
}

WidthExpr::Kind WidthExpr::kind() const { return node_->kind; }
VarId WidthExpr::varId() const { return node_->var; }
Int WidthExpr::value() const { return node_->value; }
const WidthExpr &WidthExpr::lhs() const { return *node_->a; }
const WidthExpr &WidthExpr::rhs() const { return *node_->b; }

bool operator==(const WidthExpr &x, const WidthExpr &y) {
  if (x.node_ == y.node_)
    return true;
  if (x.kind() != y.kind())
    return false;
  switch (x.kind()) {
  case WidthExpr::Kind::Var:
    return x.varId() == y.varId();
  case WidthExpr::Kind::Const:
    return x.value() == y.value();
  case WidthExpr::Kind::Exp2:
    return x.lhs() == y.lhs();
  default:
    return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

//===----------------------------------------------------------------------===//
// FirwineSystem
//===----------------------------------------------------------------------===//

VarId FirwineSystem::variable(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end())
    return it->second;
  VarId v{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  index_.emplace(std::string(name), v);
  byLhs_.emplace_back();
  return v;
}

std::optional<VarId> FirwineSystem::lookup(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end())
    return it->second;
  return std::nullopt;
}

void FirwineSystem::checkTerm(const LinearTerm &t) const {
  for (auto [v, c] : t.coeffs())
    if (v.index >= names_.size())
      throw Error(ErrorKind::MalformedExpr, "term refers to unknown variable");
  for (auto [v, c] : t.expAddends())
    if (v.index >= names_.size())
      throw Error(ErrorKind::MalformedExpr, "term refers to unknown variable");
}

const MinInequality &FirwineSystem::add(VarId lhs,
                                        std::vector<LinearTerm> alternatives) {
  addLabeled(MinInequality{lhs, std::move(alternatives), nextLabel_});
  return byLhs_[lhs.index].back();
}

void FirwineSystem::addLabeled(MinInequality ineq) {
  if (ineq.lhs.index >= names_.size())
    throw Error(ErrorKind::MalformedExpr, "inequality for unknown variable");
  if (ineq.alternatives.empty())
    throw Error(ErrorKind::MalformedExpr, "min() needs an alternative");
  for (const auto &t : ineq.alternatives)
    checkTerm(t);
  nextLabel_ = std::max(nextLabel_, ineq.label + 1);
  auto &list = byLhs_[ineq.lhs.index];
  auto it = std::upper_bound(list.begin(), list.end(), ineq.label,
                             [](std::uint32_t label, const MinInequality &m) {
                               return label < m.label;
                             });
  list.insert(it, std::move(ineq));
  ++count_;
}

bool FirwineSystem::isConjunctive() const {
  for (const auto &list : byLhs_)
    for (const auto &ineq : list)
      if (ineq.alternatives.size() != 1)
        return false;
  return true;
}

FirwineSystem FirwineSystem::emptyCopy() const {
  FirwineSystem copy;
  copy.names_ = names_;
  copy.index_ = index_;
  copy.byLhs_.resize(names_.size());
  copy.nextLabel_ = nextLabel_;
  return copy;
}

//===----------------------------------------------------------------------===//
// Evaluation
//===----------------------------------------------------------------------===//

static Int valueOf(std::span<const Int> a, VarId v) {
  if (v.index >= a.size())
    throw Error(ErrorKind::LengthMismatch,
                "assignment does not cover every variable");
  return a[v.index];
}

Int evaluate(const LinearTerm &term, std::span<const Int> a) {
  Int r = term.constant();
  for (auto [v, c] : term.coeffs())
    r = checkedAdd(r, checkedMul(c, valueOf(a, v)));
  for (auto [v, c] : term.expAddends())
    r = checkedAdd(r, checkedMul(c, pow2(valueOf(a, v))));
  return r;
}

Int evaluate(const WidthExpr &e, std::span<const Int> a) {
  switch (e.kind()) {
  case WidthExpr::Kind::Var:
    return valueOf(a, e.varId());
  case WidthExpr::Kind::Const:
    return e.value();
  case WidthExpr::Kind::Add:
    return checkedAdd(evaluate(e.lhs(), a), evaluate(e.rhs(), a));
  case WidthExpr::Kind::Min:
    return std::min(evaluate(e.lhs(), a), evaluate(e.rhs(), a));
  case WidthExpr::Kind::Max:
    return std::max(evaluate(e.lhs(), a), evaluate(e.rhs(), a));
  case WidthExpr::Kind::Exp2:
    return pow2(evaluate(e.lhs(), a));
  }
  throw Error(ErrorKind::Internal, "bad width expression");
}

Int evaluateRhs(const MinInequality &ineq, std::span<const Int> a) {
  Int best = evaluate(ineq.alternatives.front(), a);
  for (std::size_t i = 1; i < ineq.alternatives.size(); ++i)
    best = std::min(best, evaluate(ineq.alternatives[i], a));
  return best;
}

SatCheck satisfies(const FirwineSystem &sys, std::span<const Int> a) {
  if (a.size() != sys.numVariables())
    throw Error(ErrorKind::LengthMismatch, "assignment has wrong length");
  for (std::uint32_t i = 0; i < sys.numVariables(); ++i)
    for (const auto &ineq : sys.inequalitiesFor(VarId{i}))
      if (a[i] < evaluateRhs(ineq, a))
        return SatCheck{&ineq};
  return SatCheck{};
}

Assignment pointwiseMin(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::LengthMismatch,
                "pointwiseMin of assignments with different lengths");
  Assignment r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

//===----------------------------------------------------------------------===//
// Disjuncts
//===----------------------------------------------------------------------===//

DisjunctEnumerator::DisjunctEnumerator(const FirwineSystem &sys) : sys_(sys) {
  sys.forEachInequality([&](const MinInequality &m) { ineqs_.push_back(&m); });
  choice_.assign(ineqs_.size(), 0);
}

Int DisjunctEnumerator::count() const {
  Int n = 1;
  for (const auto *m : ineqs_)
    n = checkedMul(n, static_cast<Int>(m->alternatives.size()));
  return n;
}

std::optional<FirwineSystem> DisjunctEnumerator::next() {
  if (done_)
    return std::nullopt;
  FirwineSystem d = sys_.emptyCopy();
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    d.addLabeled(MinInequality{ineqs_[i]->lhs,
                               {ineqs_[i]->alternatives[choice_[i]]},
                               ineqs_[i]->label});
  // Odometer step, last inequality fastest.
  std::size_t i = ineqs_.size();
  while (i > 0) {
    --i;
    if (++choice_[i] < ineqs_[i]->alternatives.size())
      return d;
    choice_[i] = 0;
  }
  done_ = true;
  return d;
}

//===----------------------------------------------------------------------===//
// Printing
//===----------------------------------------------------------------------===//

std::string formatTerm(const FirwineSystem &sys, const LinearTerm &t) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first)
      os << " + ";
    first = false;
  };
  for (auto [v, c] : t.coeffs()) {
    sep();
    if (c != 1)
      os << c << '*';
    os << sys.name(v);
  }
  for (auto [v, c] : t.expAddends()) {
    sep();
    if (c != 1)
      os << c << '*';
    os << "2^" << sys.name(v);
  }
  if (first)
    os << t.constant();
  else if (t.constant() > 0)
    os << " + " << t.constant();
  else if (t.constant() < 0)
    os << " - " << (0ULL - static_cast<unsigned long long>(t.constant()));
  return os.str();
}

std::string formatInequality(const FirwineSystem &sys,
                             const MinInequality &ineq) {
  std::string s = sys.name(ineq.lhs) + " >= ";
  if (ineq.alternatives.size() == 1)
    return s + formatTerm(sys, ineq.alternatives.front());
  s += "min(";
  for (std::size_t i = 0; i < ineq.alternatives.size(); ++i) {
    if (i)
      s += ", ";
    s += formatTerm(sys, ineq.alternatives[i]);
  }
  return s + ")";
}

} // namespace firwine
