//===- Oracle.cpp - Reference least-solution computations ----------------===//

#include "firwine/Oracle.h"

#include <algorithm>

namespace firwine {

namespace {

using Wide = __int128;

// Large enough to exceed any Int cutoff, small enough that sums of a few
// thousand saturated addends stay representable.
constexpr Wide kSaturated = Wide{1} << 100;

Wide saturate(Wide x) { return std::min(x, kSaturated); }

// Flat copy of the system for fast repeated evaluation.
struct Compiled {
  struct Alt {
    Int constant;
    std::uint32_t linBegin, linEnd, expBegin, expEnd;
  };
  struct Ineq {
    std::uint32_t lhs;
    std::uint32_t altBegin, altEnd;
  };
  std::vector<std::pair<std::uint32_t, Int>> lin, exp;
  std::vector<Alt> alts;
  std::vector<Ineq> ineqs;

  explicit Compiled(const FirwineSystem &sys) {
    sys.forEachInequality([&](const MinInequality &m) {
      Ineq q{m.lhs.index, static_cast<std::uint32_t>(alts.size()), 0};
      for (const auto &t : m.alternatives) {
        Alt a{t.constant(), static_cast<std::uint32_t>(lin.size()), 0,
              static_cast<std::uint32_t>(exp.size()), 0};
        for (auto [v, c] : t.coeffs())
          lin.push_back({v.index, c});
        for (auto [v, c] : t.expAddends())
          exp.push_back({v.index, c});
        a.linEnd = static_cast<std::uint32_t>(lin.size());
        a.expEnd = static_cast<std::uint32_t>(exp.size());
        alts.push_back(a);
      }
      q.altEnd = static_cast<std::uint32_t>(alts.size());
      ineqs.push_back(q);
    });
  }

  Wide alt(const Alt &a, const Int *x) const {
    Wide r = a.constant;
    for (std::uint32_t k = a.linBegin; k < a.linEnd; ++k)
      r += saturate(Wide{lin[k].second} * x[lin[k].first]);
    for (std::uint32_t k = a.expBegin; k < a.expEnd; ++k) {
      Int e = x[exp[k].first];
      r += e >= 100 ? kSaturated
                    : saturate(Wide{exp[k].second} * (Wide{1} << e));
    }
    return r;
  }

  Wide rhs(const Ineq &q, const Int *x) const {
    Wide best = alt(alts[q.altBegin], x);
    for (std::uint32_t k = q.altBegin + 1; k < q.altEnd; ++k)
      best = std::min(best, alt(alts[k], x));
    return best;
  }
};

} // namespace

OracleResult kleeneLfp(const FirwineSystem &sys, Int cutoff,
                       const std::function<void(const Assignment &)> &observer) {
  Compiled c(sys);
  const std::size_t n = sys.numVariables();
  Assignment a(n, 0), next(n, 0);
  for (;;) {
    // Jacobi step: every component is computed from the previous iterate.
    next = a;
    for (const auto &q : c.ineqs) {
      Wide r = c.rhs(q, a.data());
      if (r > next[q.lhs]) {
        if (r > cutoff)
          return OracleResult{OracleStatus::Diverged, {}, cutoff};
        next[q.lhs] = static_cast<Int>(r);
      }
    }
    if (observer)
      observer(next);
    if (next == a)
      return OracleResult{OracleStatus::Sat, std::move(a), 0};
    a.swap(next);
  }
}

namespace {

class BoxSearch {
public:
  BoxSearch(const FirwineSystem &sys, Int bound)
      : c_(sys), n_(sys.numVariables()), bound_(bound), x_(n_, 0) {}

  bool run() { return descend(0, std::vector<Int>(n_, 0)); }
  const Assignment &solution() const { return x_; }

private:
  // Raises the lower limits of the unassigned variables (index >= depth) to
  // what the inequalities force, given the assigned prefix. False when no
  // completion inside the box can exist.
  bool propagate(std::size_t depth, std::vector<Int> &lo) {
    for (std::size_t i = depth; i < n_; ++i)
      x_[i] = lo[i];
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto &q : c_.ineqs) {
        Wide r = c_.rhs(q, x_.data());
        if (r <= x_[q.lhs])
          continue;
        if (q.lhs < depth || r > bound_)
          return false;
        x_[q.lhs] = lo[q.lhs] = static_cast<Int>(r);
        changed = true;
      }
    }
    return true;
  }

  bool descend(std::size_t depth, std::vector<Int> lo) {
    if (!propagate(depth, lo))
      return false;
    if (depth == n_)
      return true;
    for (Int v = lo[depth]; v <= bound_; ++v) {
      std::vector<Int> child = lo;
      child[depth] = v;
      x_[depth] = v;
      if (descend(depth + 1, std::move(child)))
        return true;
    }
    return false;
  }

  Compiled c_;
  std::size_t n_;
  Int bound_;
  Assignment x_;
};

} // namespace

OracleResult exhaustiveLeast(const FirwineSystem &sys, Int bound) {
  BoxSearch search(sys, bound);
  if (!search.run())
    return OracleResult{OracleStatus::NoSolutionInBox, {}, bound};
  // The first point in lexicographic order is below every other solution,
  // since solutions are closed under pointwise minimum.
  Assignment least = search.solution();
  if (!satisfies(sys, least).ok())
    throw Error(ErrorKind::Internal, "box search returned a non-solution");
  return OracleResult{OracleStatus::Sat, std::move(least), 0};
}

} // namespace firwine
