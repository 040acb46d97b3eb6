//===- DepGraph.cpp - Dependency graph and SCC decomposition -------------===//

#include "firwine/DepGraph.h"

#include <algorithm>
#include <ostream>
#include <set>

namespace firwine {

static void appendEdges(std::vector<DepEdge> &out, const MinInequality &m,
                        const LinearTerm &t) {
  for (auto [v, a] : t.coeffs())
    out.push_back(DepEdge{m.lhs, m.label, a, v, false});
  for (auto [v, a] : t.expAddends())
    out.push_back(DepEdge{m.lhs, m.label, 1, v, true});
}

DepGraph buildGraph(const FirwineSystem &sys) {
  DepGraph g;
  g.outStart_.reserve(sys.numVariables() + 1);
  for (std::uint32_t i = 0; i < sys.numVariables(); ++i) {
    for (const auto &m : sys.inequalitiesFor(VarId{i})) {
      if (m.alternatives.size() != 1)
        throw Error(ErrorKind::NotConjunctive,
                    "dependency graph needs a min-free system");
      appendEdges(g.edges_, m, m.alternatives.front());
    }
    g.outStart_.push_back(g.edges_.size());
  }
  return g;
}

SccDecomposition tarjanScc(const DepGraph &g) {
  const std::size_t n = g.numVertices();
  constexpr std::uint32_t unvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<bool> onStack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;
  std::vector<std::vector<VarId>> reversed;

  // Explicit DFS stack of (vertex, next out-edge position).
  std::vector<std::pair<std::uint32_t, std::size_t>> work;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != unvisited)
      continue;
    work.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = true;
    while (!work.empty()) {
      auto &[v, pos] = work.back();
      auto out = g.outEdges(VarId{v});
      if (pos < out.size()) {
        std::uint32_t w = out[pos++].dst.index;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = true;
          work.push_back({w, 0});
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t done = v;
      work.pop_back();
      if (!work.empty())
        low[work.back().first] = std::min(low[work.back().first], low[done]);
      if (low[done] != index[done])
        continue;
      std::vector<VarId> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        comp.push_back(VarId{w});
      } while (w != done);
      std::sort(comp.begin(), comp.end());
      reversed.push_back(std::move(comp));
    }
  }

  SccDecomposition d;
  d.components.assign(std::make_move_iterator(reversed.rbegin()),
                      std::make_move_iterator(reversed.rend()));
  d.componentOf.assign(n, 0);
  for (std::uint32_t c = 0; c < d.components.size(); ++c)
    for (VarId v : d.components[c])
      d.componentOf[v.index] = c;
  return d;
}

bool isTrivial(const DepGraph &g, const SccDecomposition &scc,
               std::size_t component) {
  for (VarId v : scc.components[component])
    for (const auto &e : g.outEdges(v))
      if (scc.componentOf[e.dst.index] == component)
        return false;
  return true;
}

bool isExpansive(const DepGraph &g, const SccDecomposition &scc,
                 std::size_t component) {
  bool expansive = false;
  for (VarId v : scc.components[component]) {
    std::set<std::uint32_t> labels;
    for (const auto &e : g.outEdges(v)) {
      if (scc.componentOf[e.dst.index] != component)
        continue;
      if (e.viaExp)
        throw Error(ErrorKind::UnsupportedDynamicShift,
                    "dynamic shift amount depends cyclically on the shifted "
                    "width");
      if (e.weight > 1 || !labels.insert(e.label).second)
        expansive = true;
    }
  }
  return expansive;
}

static std::string dotQuote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

void writeDot(std::ostream &os, const FirwineSystem &sys) {
  os << "digraph deps {\n";
  for (const auto &name : sys.names())
    os << "  " << dotQuote(name) << ";\n";
  sys.forEachInequality([&](const MinInequality &m) {
    std::vector<DepEdge> edges;
    for (const auto &t : m.alternatives)
      appendEdges(edges, m, t);
    for (const auto &e : edges) {
      os << "  " << dotQuote(sys.name(e.src)) << " -> "
         << dotQuote(sys.name(e.dst)) << " [label=\"l" << e.label << "/w"
         << e.weight << "\"";
      if (e.viaExp)
        os << ", style=dashed";
      os << "];\n";
    }
  });
  os << "}\n";
}

} // namespace firwine
