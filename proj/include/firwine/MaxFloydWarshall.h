//===- MaxFloydWarshall.h - Nonexpansive component solver -------*- C++ -*-===//
//
// Inside a nonexpansive component every inequality is x >= c + y or x >= c.
// The former become weighted edges (x, c, y); the least solution is read off
// the all-pairs maximum path weights.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_MAXFLOYDWARSHALL_H
#define FIRWINE_MAXFLOYDWARSHALL_H

#include "firwine/SccSystem.h"

#include <iosfwd>
#include <limits>

namespace firwine {

struct WeightedEdge {
  std::uint32_t src = 0;
  Int weight = 0;
  std::uint32_t dst = 0;
};

struct WeightedGraph {
  std::size_t numVertices = 0;
  std::vector<WeightedEdge> edges;
};

/// No path.
inline constexpr Int kNegInf = std::numeric_limits<Int>::min();

class MaxDistMatrix {
public:
  explicit MaxDistMatrix(std::size_t n) : n_(n), data_(n * n, kNegInf) {}

  std::size_t size() const { return n_; }
  Int at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Int &at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  friend bool operator==(const MaxDistMatrix &, const MaxDistMatrix &) = default;

private:
  std::size_t n_;
  std::vector<Int> data_;
};

struct NonexpansiveProblem {
  WeightedGraph graph;
  std::vector<Int> v; // max(0, constant lower bounds)
};

/// Throws NotNonexpansive when an inequality has a coefficient above 1 or
/// more than one variable.
NonexpansiveProblem buildWeightedGraph(const SccSystem &scc);

struct MaxFwResult {
  std::optional<MaxDistMatrix> matrix;
  /// Vertices found on a positive cycle when matrix is empty.
  std::vector<std::uint32_t> cycle;

  bool positiveCycle() const { return !matrix; }
};

MaxFwResult maxFloydWarshall(const WeightedGraph &g);

/// u_i = max(v_i, max_j W[i][j] + v_j).
Assignment leastSolutionNonexpansive(const MaxDistMatrix &w,
                                     std::span<const Int> v);

void printMatrix(std::ostream &os, const MaxDistMatrix &w);

} // namespace firwine

#endif // FIRWINE_MAXFLOYDWARSHALL_H
