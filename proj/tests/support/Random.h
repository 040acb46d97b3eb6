// Random instance generators and brute-force references shared by the unit
// tests and the acceptance runner.

#ifndef FIRWINE_TESTS_RANDOM_H
#define FIRWINE_TESTS_RANDOM_H

#include "firwine/Constraint.h"
#include "firwine/MaxFloydWarshall.h"

#include <random>
#include <string>
#include <vector>

namespace firwine::testing {

using Rng = std::mt19937_64;

struct SystemShape {
  int maxVars = 6;
  int maxIneqs = 8;
  int maxAlts = 2;
  Int maxCoeff = 3;
  Int minConst = -10;
  Int maxConst = 10;
};

inline Int uniform(Rng &rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline LinearTerm randomTerm(Rng &rng, int n, const SystemShape &shape) {
  LinearTerm t(uniform(rng, shape.minConst, shape.maxConst));
  for (int j = 0; j < n; ++j) {
    // Sparse: about one variable per term on average.
    if (uniform(rng, 0, n - 1) != 0)
      continue;
    Int c = uniform(rng, 0, shape.maxCoeff);
    if (c > 0)
      t.addVariable(VarId{static_cast<std::uint32_t>(j)}, c);
  }
  return t;
}

/// Variables are named x0..x(n-1) and interned in index order.
inline FirwineSystem randomSystem(Rng &rng, const SystemShape &shape,
                                  int vars = 0) {
  FirwineSystem sys;
  int n = vars > 0 ? vars : static_cast<int>(uniform(rng, 1, shape.maxVars));
  for (int i = 0; i < n; ++i)
    sys.variable("x" + std::to_string(i));
  int m = static_cast<int>(uniform(rng, 0, shape.maxIneqs));
  for (int k = 0; k < m; ++k) {
    VarId lhs{static_cast<std::uint32_t>(uniform(rng, 0, n - 1))};
    std::vector<LinearTerm> alts;
    int a = static_cast<int>(uniform(rng, 1, shape.maxAlts));
    for (int i = 0; i < a; ++i)
      alts.push_back(randomTerm(rng, n, shape));
    sys.add(lhs, std::move(alts));
  }
  return sys;
}

inline WeightedGraph randomWeightedGraph(Rng &rng, int maxVertices,
                                         Int maxAbsWeight) {
  WeightedGraph g;
  g.numVertices = static_cast<std::size_t>(uniform(rng, 1, maxVertices));
  int m = static_cast<int>(uniform(rng, 0, 2 * static_cast<Int>(g.numVertices)));
  for (int k = 0; k < m; ++k) {
    auto s = static_cast<std::uint32_t>(uniform(rng, 0, g.numVertices - 1));
    auto d = static_cast<std::uint32_t>(uniform(rng, 0, g.numVertices - 1));
    g.edges.push_back({s, uniform(rng, -maxAbsWeight, maxAbsWeight), d});
  }
  return g;
}

/// Heaviest parallel edge between every ordered pair, kNegInf when absent.
inline std::vector<std::vector<Int>> heaviestEdges(const WeightedGraph &g) {
  std::vector<std::vector<Int>> w(g.numVertices,
                                  std::vector<Int>(g.numVertices, kNegInf));
  for (const auto &e : g.edges)
    w[e.src][e.dst] = std::max(w[e.src][e.dst], e.weight);
  return w;
}

/// Enumerates every simple cycle (each exactly once, rooted at its smallest
/// vertex) and reports whether one has positive weight.
inline bool hasPositiveSimpleCycle(const WeightedGraph &g) {
  auto w = heaviestEdges(g);
  std::size_t n = g.numVertices;
  std::vector<bool> onPath(n, false);
  bool found = false;
  auto dfs = [&](auto &&self, std::size_t root, std::size_t u, Int sum) -> void {
    for (std::size_t v = root; v < n && !found; ++v) {
      if (w[u][v] == kNegInf)
        continue;
      if (v == root) {
        if (sum + w[u][v] > 0)
          found = true;
      } else if (!onPath[v]) {
        onPath[v] = true;
        self(self, root, v, sum + w[u][v]);
        onPath[v] = false;
      }
    }
  };
  for (std::size_t r = 0; r < n && !found; ++r) {
    onPath[r] = true;
    dfs(dfs, r, r, 0);
    onPath[r] = false;
  }
  return found;
}

/// Maximum weight over simple paths i -> j (the empty path counts for i == j).
/// Only meaningful when no positive cycle exists.
inline std::vector<std::vector<Int>> bruteMaxPaths(const WeightedGraph &g) {
  auto w = heaviestEdges(g);
  std::size_t n = g.numVertices;
  std::vector<std::vector<Int>> best(n, std::vector<Int>(n, kNegInf));
  std::vector<bool> onPath(n, false);
  auto dfs = [&](auto &&self, std::size_t start, std::size_t u, Int sum) -> void {
    best[start][u] = std::max(best[start][u], sum);
    for (std::size_t v = 0; v < n; ++v) {
      if (w[u][v] == kNegInf)
        continue;
      if (v == start)
        best[start][start] = std::max(best[start][start], sum + w[u][v]);
      else if (!onPath[v]) {
        onPath[v] = true;
        self(self, start, v, sum + w[u][v]);
        onPath[v] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    onPath[s] = true;
    dfs(dfs, s, s, 0);
    onPath[s] = false;
  }
  return best;
}

} // namespace firwine::testing

#endif // FIRWINE_TESTS_RANDOM_H
