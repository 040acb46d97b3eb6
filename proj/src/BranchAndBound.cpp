//===- BranchAndBound.cpp - Expansive component solver -------------------===//

#include "firwine/BranchAndBound.h"

#include <algorithm>
#include <deque>

namespace firwine {

namespace {

struct OutEdge {
  std::uint32_t dst;
  std::size_t ineq;
  Int coeff;
};

// Out-edges per local vertex, sorted by destination then label.
std::vector<std::vector<OutEdge>> adjacency(const SccSystem &scc) {
  std::vector<std::vector<OutEdge>> adj(scc.size());
  for (std::size_t k = 0; k < scc.ineqs.size(); ++k)
    for (auto [j, a] : scc.ineqs[k].coeffs)
      adj[scc.ineqs[k].lhs].push_back({j, k, a});
  for (auto &edges : adj)
    std::stable_sort(edges.begin(), edges.end(),
                     [](const OutEdge &x, const OutEdge &y) {
                       return x.dst < y.dst;
                     });
  return adj;
}

// Composed inequality along a BFS-shortest path from `from` to `to`.
PathIneq pathInequality(const SccSystem &scc,
                        const std::vector<std::vector<OutEdge>> &adj,
                        std::uint32_t from, std::uint32_t to) {
  PathIneq p{from, from, 0, 1};
  if (from == to)
    return p;
  const std::size_t n = scc.size();
  std::vector<std::optional<OutEdge>> via(n);
  std::vector<std::uint32_t> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<std::uint32_t> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    for (const auto &e : adj[u]) {
      if (seen[e.dst])
        continue;
      seen[e.dst] = true;
      parent[e.dst] = u;
      via[e.dst] = e;
      queue.push_back(e.dst);
    }
  }
  if (!seen[to])
    throw Error(ErrorKind::Internal, "component is not strongly connected");
  std::vector<std::uint32_t> hops;
  for (std::uint32_t x = to; x != from; x = parent[x])
    hops.push_back(x);
  std::reverse(hops.begin(), hops.end());
  for (std::uint32_t x : hops)
    p = extend(p, scc.ineqs[via[x]->ineq], x);
  return p;
}

} // namespace

PathIneq extend(const PathIneq &p, const LocalIneq &q, std::uint32_t w) {
  Int coeff = 0;
  for (auto [j, a] : q.coeffs)
    if (j == w)
      coeff = a;
  if (q.lhs != p.dst || coeff == 0)
    throw Error(ErrorKind::Internal, "edge does not continue the path");
  return PathIneq{p.src, w, checkedAdd(p.a, checkedMul(p.b, q.constant)),
                  checkedMul(p.b, coeff)};
}

std::optional<std::vector<Int>> computeUpperBounds(const SccSystem &scc) {
  const std::size_t n = scc.size();
  auto adj = adjacency(scc);

  // Seed: one variable with a finite bound from a cycle x >= A + B*x, B > 1.
  std::optional<std::uint32_t> seed;
  Int seedBound = 0;
  for (const auto &q : scc.ineqs) {
    for (auto [j, a] : q.coeffs) {
      if (a <= 1)
        continue;
      PathIneq p = extend(PathIneq{q.lhs, q.lhs, 0, 1}, q, j);
      PathIneq back = pathInequality(scc, adj, j, q.lhs);
      Int A = checkedAdd(p.a, checkedMul(p.b, back.a));
      Int B = checkedMul(p.b, back.b);
      seed = q.lhs;
      seedBound = floorDiv(-A, B - 1);
      break;
    }
    if (seed)
      break;
  }
  if (!seed) {
    for (const auto &q : scc.ineqs) {
      if (q.coeffs.size() < 2)
        continue;
      // x >= c + a1*y1 + a2*y2 with y1, y2 reaching back to x.
      auto [y1, a1] = q.coeffs[0];
      auto [y2, a2] = q.coeffs[1];
      PathIneq p1 = pathInequality(scc, adj, y1, q.lhs);
      PathIneq p2 = pathInequality(scc, adj, y2, q.lhs);
      Int A = checkedAdd(q.constant,
                         checkedAdd(checkedMul(a1, p1.a), checkedMul(a2, p2.a)));
      Int K = checkedAdd(checkedMul(a1, p1.b), checkedMul(a2, p2.b));
      seed = q.lhs;
      seedBound = floorDiv(-A, K - 1);
      break;
    }
  }
  if (!seed)
    throw Error(ErrorKind::Internal, "component is not expansive");
  if (seedBound < 0)
    return std::nullopt;

  // x' <= c and x' >= b0 + a'*y give y <= floor((c - b0) / a').
  std::vector<std::optional<Int>> ub(n);
  ub[*seed] = seedBound;
  std::deque<std::uint32_t> queue{*seed};
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    std::vector<const OutEdge *> byLabel;
    for (const auto &e : adj[u])
      byLabel.push_back(&e);
    std::stable_sort(byLabel.begin(), byLabel.end(),
                     [](const OutEdge *x, const OutEdge *y) {
                       return x->ineq < y->ineq;
                     });
    for (const OutEdge *e : byLabel) {
      if (ub[e->dst])
        continue;
      Int bound =
          floorDiv(checkedSub(*ub[u], scc.ineqs[e->ineq].constant), e->coeff);
      if (bound < 0)
        return std::nullopt;
      ub[e->dst] = bound;
      queue.push_back(e->dst);
    }
  }
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!ub[i])
      throw Error(ErrorKind::Internal, "component is not strongly connected");
    out[i] = *ub[i];
  }
  return out;
}

std::vector<Int> lowerBounds(const SccSystem &scc) {
  std::vector<Int> lb(scc.size(), 0);
  for (const auto &q : scc.ineqs)
    lb[q.lhs] = std::max(lb[q.lhs], q.constant);
  return lb;
}

const char *toString(BabRule rule) {
  switch (rule) {
  case BabRule::NotLbLeUb:
    return "BaB: not lb <= ub";
  case BabRule::EqSat:
    return "BaB: eq-sat";
  case BabRule::EqUnsat:
    return "BaB: eq-unsat";
  case BabRule::NeqTrue:
    return "BaB: neq-true";
  case BabRule::NeqFalseRhs1:
    return "BaB: neq-false-rhs-1";
  case BabRule::NeqFalseRhs2:
    return "BaB: neq-false-rhs-2";
  case BabRule::NeqFalseLhs:
    return "BaB: neq-false-lhs";
  }
  return "BaB";
}

namespace {

std::optional<Assignment> bab(const SccSystem &scc, std::vector<Int> lb,
                              std::vector<Int> ub, Int parent,
                              const BabObserver &observer) {
  const std::size_t n = scc.size();
  // Tail calls of the rules run as loop iterations; only the first branch of
  // neq-false-rhs needs a nested call.
  for (;;) {
    Int measure = 0;
    for (std::size_t i = 0; i < n; ++i)
      measure = checkedAdd(measure, checkedSub(ub[i], lb[i]));
    auto fire = [&](BabRule rule) {
      if (observer)
        observer(BabEvent{rule, lb, ub, measure, parent});
    };

    bool equal = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lb[i] > ub[i]) {
        fire(BabRule::NotLbLeUb);
        return std::nullopt;
      }
      equal = equal && lb[i] == ub[i];
    }
    if (equal) {
      if (scc.satisfiedBy(lb)) {
        fire(BabRule::EqSat);
        return lb;
      }
      fire(BabRule::EqUnsat);
      return std::nullopt;
    }

    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = lb[i] + (ub[i] - lb[i]) / 2;
    const LocalIneq *bad = scc.firstViolated(v);
    if (!bad) {
      fire(BabRule::NeqTrue);
      parent = measure;
      ub = std::move(v);
      continue;
    }

    std::optional<std::uint32_t> j0;
    for (auto [j, a] : bad->coeffs)
      if (a > 0 && lb[j] < v[j]) {
        j0 = j;
        break;
      }
    if (!j0) {
      fire(BabRule::NeqFalseLhs);
      parent = measure;
      lb[bad->lhs] = checkedAdd(v[bad->lhs], 1);
      continue;
    }
    std::vector<Int> lowerUb = ub;
    lowerUb[*j0] = v[*j0] - 1;
    if (auto theta = bab(scc, lb, std::move(lowerUb), measure, observer)) {
      fire(BabRule::NeqFalseRhs1);
      return theta;
    }
    fire(BabRule::NeqFalseRhs2);
    parent = measure;
    lb[*j0] = v[*j0];
  }
}

} // namespace

std::optional<Assignment> branchAndBound(const SccSystem &scc,
                                         std::vector<Int> lb,
                                         std::vector<Int> ub,
                                         const BabObserver &observer) {
  if (lb.size() != scc.size() || ub.size() != scc.size())
    throw Error(ErrorKind::LengthMismatch, "bounds do not match component");
  return bab(scc, std::move(lb), std::move(ub), -1, observer);
}

} // namespace firwine
