//===- Constraint.h - Width constraint data types ---------------*- C++ -*-===//
//
// Min-inequalities  x >= min(t1, ..., tk)  over nonnegative integer
// variables, where every ti is an affine term a0 + sum(aj * xj) with aj > 0,
// optionally extended by addends c * 2^x that arise from dynamic shifts.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_CONSTRAINT_H
#define FIRWINE_CONSTRAINT_H

#include "firwine/Arith.h"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace firwine {

struct VarId {
  std::uint32_t index = 0;

  friend auto operator<=>(const VarId &, const VarId &) = default;
};

/// constant + sum(coeff * x) + sum(expCoeff * 2^x). Entries are kept sorted by
/// VarId and never hold a zero coefficient.
class LinearTerm {
public:
  using Entry = std::pair<VarId, Int>;

  LinearTerm() = default;
  explicit LinearTerm(Int constant) : constant_(constant) {}

  static LinearTerm variable(VarId v, Int coeff = 1);
  static LinearTerm exponential(VarId v, Int coeff = 1);

  Int constant() const { return constant_; }
  const std::vector<Entry> &coeffs() const { return coeffs_; }
  const std::vector<Entry> &expAddends() const { return exps_; }
  Int coeff(VarId v) const;
  Int expCoeff(VarId v) const;
  bool isConstant() const { return coeffs_.empty() && exps_.empty(); }

  LinearTerm &addConstant(Int c);
  /// Coefficients must be positive.
  LinearTerm &addVariable(VarId v, Int coeff);
  LinearTerm &addExponential(VarId v, Int coeff);
  LinearTerm &operator+=(const LinearTerm &other);

  friend LinearTerm operator+(LinearTerm a, const LinearTerm &b) {
    return a += b;
  }
  friend bool operator==(const LinearTerm &, const LinearTerm &) = default;

private:
  Int constant_ = 0;
  std::vector<Entry> coeffs_;
  std::vector<Entry> exps_;
};

/// Raw width expression tree built by the frontend. Immutable; subtrees are
/// shared.
class WidthExpr {
public:
  enum class Kind { Var, Const, Add, Min, Max, Exp2 };

  static WidthExpr var(VarId v);
  static WidthExpr constant(Int c);
  static WidthExpr add(WidthExpr a, WidthExpr b);
  static WidthExpr min(WidthExpr a, WidthExpr b);
  static WidthExpr max(WidthExpr a, WidthExpr b);
  static WidthExpr exp2(WidthExpr a);

  Kind kind() const;
  VarId varId() const;
  Int value() const;
  /// Children: lhs/rhs for binary nodes, lhs alone for Exp2.
  const WidthExpr &lhs() const;
  const WidthExpr &rhs() const;

  friend WidthExpr operator+(WidthExpr a, WidthExpr b) {
    return add(std::move(a), std::move(b));
  }
  friend WidthExpr operator+(WidthExpr a, Int c) {
    return add(std::move(a), constant(c));
  }

  /// Structural equality.
  friend bool operator==(const WidthExpr &a, const WidthExpr &b);

private:
  struct Node;
  explicit WidthExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct MinInequality {
  VarId lhs;
  std::vector<LinearTerm> alternatives;
  std::uint32_t label = 0;
};

using Assignment = std::vector<Int>;

/// A check  bound >= rhs  produced by a connect into a sink whose width is
/// fixed. Not part of the system; validated after solving.
struct ConstantCheck {
  Int bound = 0;
  WidthExpr rhs = WidthExpr::constant(0);
  std::string what;
};

class FirwineSystem {
public:
  /// Returns the variable with this name, creating it if needed.
  VarId variable(std::string_view name);
  std::optional<VarId> lookup(std::string_view name) const;
  std::size_t numVariables() const { return names_.size(); }
  const std::string &name(VarId v) const { return names_[v.index]; }
  const std::vector<std::string> &names() const { return names_; }

  /// Adds lhs >= min(alternatives) under a fresh label and returns it.
  const MinInequality &add(VarId lhs, std::vector<LinearTerm> alternatives);
  /// Adds an inequality keeping its label (used when deriving systems).
  void addLabeled(MinInequality ineq);

  const std::vector<MinInequality> &inequalitiesFor(VarId v) const {
    return byLhs_[v.index];
  }
  std::size_t numInequalities() const { return count_; }
  bool isConjunctive() const;

  /// Visits inequalities in (lhs, label) order.
  template <typename Fn> void forEachInequality(Fn &&fn) const {
    for (const auto &list : byLhs_)
      for (const auto &ineq : list)
        fn(ineq);
  }

  /// Same variable table, no inequalities.
  FirwineSystem emptyCopy() const;

private:
  void checkTerm(const LinearTerm &t) const;

  std::vector<std::string> names_;
  std::map<std::string, VarId, std::less<>> index_;
  std::vector<std::vector<MinInequality>> byLhs_;
  std::size_t count_ = 0;
  std::uint32_t nextLabel_ = 1;
};

Int evaluate(const LinearTerm &term, std::span<const Int> a);
Int evaluate(const WidthExpr &expr, std::span<const Int> a);
/// min over the alternatives.
Int evaluateRhs(const MinInequality &ineq, std::span<const Int> a);

struct SatCheck {
  const MinInequality *violated = nullptr;
  bool ok() const { return violated == nullptr; }
};

/// First violated inequality in (lhs, label) order, if any.
SatCheck satisfies(const FirwineSystem &sys, std::span<const Int> a);

Assignment pointwiseMin(std::span<const Int> a, std::span<const Int> b);

/// Lazily yields the conjunctive systems obtained by picking one alternative
/// per inequality. The first alternative varies slowest, following
/// (lhs, label) order.
class DisjunctEnumerator {
public:
  explicit DisjunctEnumerator(const FirwineSystem &sys);

  std::optional<FirwineSystem> next();
  /// Product of alternative counts.
  Int count() const;

private:
  const FirwineSystem &sys_;
  std::vector<const MinInequality *> ineqs_;
  std::vector<std::size_t> choice_;
  bool done_ = false;
};

std::string formatTerm(const FirwineSystem &sys, const LinearTerm &t);
std::string formatInequality(const FirwineSystem &sys,
                             const MinInequality &ineq);

} // namespace firwine

#endif // FIRWINE_CONSTRAINT_H
