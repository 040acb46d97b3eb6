//===- DepGraph.h - Dependency graph and SCC decomposition ------*- C++ -*-===//
//
// Inequality l: x >= a0 + sum(aj * xj) contributes an edge (x, l, aj, xj) per
// variable with aj > 0, and an edge of weight 1 marked viaExp per 2^v addend.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_DEPGRAPH_H
#define FIRWINE_DEPGRAPH_H

#include "firwine/Constraint.h"

#include <iosfwd>

namespace firwine {

struct DepEdge {
  VarId src;
  std::uint32_t label = 0;
  Int weight = 1;
  VarId dst;
  bool viaExp = false;
};

class DepGraph {
public:
  std::size_t numVertices() const { return outStart_.size() - 1; }
  const std::vector<DepEdge> &edges() const { return edges_; }
  /// Edges leaving v, in label order.
  std::span<const DepEdge> outEdges(VarId v) const {
    return {edges_.data() + outStart_[v.index],
            edges_.data() + outStart_[v.index + 1]};
  }

private:
  friend DepGraph buildGraph(const FirwineSystem &sys);
  std::vector<DepEdge> edges_;
  std::vector<std::size_t> outStart_{0};
};

/// Throws NotConjunctive if some inequality has several alternatives.
DepGraph buildGraph(const FirwineSystem &sys);

struct SccDecomposition {
  /// Topological: every edge goes from a component to itself or a later one.
  /// Each component lists its vertices in VarId order.
  std::vector<std::vector<VarId>> components;
  std::vector<std::uint32_t> componentOf;
};

SccDecomposition tarjanScc(const DepGraph &g);

/// True if an edge internal to the component has weight > 1 or two internal
/// edges share (src, label). Throws UnsupportedDynamicShift for an internal
/// viaExp edge.
bool isExpansive(const DepGraph &g, const SccDecomposition &scc,
                 std::size_t component);

/// A component is trivial when it has no internal edge.
bool isTrivial(const DepGraph &g, const SccDecomposition &scc,
               std::size_t component);

/// Graphviz dump; edges are labelled "l<label>/w<weight>".
void writeDot(std::ostream &os, const FirwineSystem &sys);

} // namespace firwine

#endif // FIRWINE_DEPGRAPH_H
