//===- MaxFloydWarshall.cpp - Nonexpansive component solver --------------===//

#include "firwine/MaxFloydWarshall.h"

#include <algorithm>
#include <ostream>

namespace firwine {

NonexpansiveProblem buildWeightedGraph(const SccSystem &scc) {
  NonexpansiveProblem p;
  p.graph.numVertices = scc.size();
  p.v.assign(scc.size(), 0);
  for (const auto &q : scc.ineqs) {
    if (q.coeffs.empty()) {
      p.v[q.lhs] = std::max(p.v[q.lhs], q.constant);
      continue;
    }
    if (q.coeffs.size() > 1 || q.coeffs.front().second != 1)
      throw Error(ErrorKind::NotNonexpansive,
                  "component has a non-difference inequality");
    p.graph.edges.push_back({q.lhs, q.constant, q.coeffs.front().first});
  }
  return p;
}

MaxFwResult maxFloydWarshall(const WeightedGraph &g) {
  const std::size_t n = g.numVertices;
  MaxDistMatrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    w.at(i, i) = 0;
  for (const auto &e : g.edges)
    w.at(e.src, e.dst) = std::max(w.at(e.src, e.dst), e.weight);

  MaxFwResult r;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Int ik = w.at(i, k);
      if (ik == kNegInf)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        Int kj = w.at(k, j);
        if (kj == kNegInf)
          continue;
        Int via = checkedAdd(ik, kj);
        if (via > w.at(i, j))
          w.at(i, j) = via;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (w.at(i, i) > 0)
        r.cycle.push_back(static_cast<std::uint32_t>(i));
    if (!r.cycle.empty())
      return r;
  }
  r.matrix = std::move(w);
  return r;
}

Assignment leastSolutionNonexpansive(const MaxDistMatrix &w,
                                     std::span<const Int> v) {
  const std::size_t n = w.size();
  Assignment u(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int best = std::max<Int>(v[i], 0);
    for (std::size_t j = 0; j < n; ++j)
      if (w.at(i, j) != kNegInf)
        best = std::max(best, checkedAdd(w.at(i, j), v[j]));
    u[i] = best;
  }
  return u;
}

void printMatrix(std::ostream &os, const MaxDistMatrix &w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j)
        os << ", ";
      if (w.at(i, j) == kNegInf)
        os << "-inf";
      else
        os << w.at(i, j);
    }
    os << "]\n";
  }
}

} // namespace firwine
