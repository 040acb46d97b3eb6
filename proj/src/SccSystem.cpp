//===- SccSystem.cpp - Constraints local to one component ----------------===//

#include "firwine/SccSystem.h"

#include <algorithm>

namespace firwine {

const LocalIneq *SccSystem::firstViolated(std::span<const Int> values) const {
  for (const auto &q : ineqs) {
    Int rhs = q.constant;
    for (auto [j, a] : q.coeffs)
      rhs = checkedAdd(rhs, checkedMul(a, values[j]));
    if (values[q.lhs] < rhs)
      return &q;
  }
  return nullptr;
}

SccSystem restrictToComponent(const FirwineSystem &sys,
                              std::span<const VarId> component,
                              std::span<const std::optional<Int>> solved) {
  SccSystem s;
  s.vars.assign(component.begin(), component.end());
  std::sort(s.vars.begin(), s.vars.end());
  auto localIndex = [&](VarId v) -> std::optional<std::uint32_t> {
    auto it = std::lower_bound(s.vars.begin(), s.vars.end(), v);
    if (it != s.vars.end() && *it == v)
      return static_cast<std::uint32_t>(it - s.vars.begin());
    return std::nullopt;
  };
  auto solvedValue = [&](VarId v) {
    if (v.index >= solved.size() || !solved[v.index])
      throw Error(ErrorKind::MissingSubstitution,
                  "no value for '" + sys.name(v) + "' outside the component");
    return *solved[v.index];
  };

  for (std::uint32_t li = 0; li < s.vars.size(); ++li) {
    for (const auto &m : sys.inequalitiesFor(s.vars[li])) {
      if (m.alternatives.size() != 1)
        throw Error(ErrorKind::NotConjunctive,
                    "component restriction needs a min-free system");
      const LinearTerm &t = m.alternatives.front();
      LocalIneq q{li, m.label, t.constant(), {}};
      for (auto [v, a] : t.coeffs()) {
        if (auto j = localIndex(v))
          q.coeffs.push_back({*j, a});
        else
          q.constant = checkedAdd(q.constant, checkedMul(a, solvedValue(v)));
      }
      for (auto [v, a] : t.expAddends()) {
        if (localIndex(v))
          throw Error(ErrorKind::UnsupportedDynamicShift,
                      "dynamic shift amount '" + sys.name(v) +
                          "' depends cyclically on '" + sys.name(m.lhs) + "'");
        q.constant =
            checkedAdd(q.constant, checkedMul(a, pow2(solvedValue(v))));
      }
      s.ineqs.push_back(std::move(q));
    }
  }
  return s;
}

SccSystem wholeSystem(const FirwineSystem &sys) {
  std::vector<VarId> all(sys.numVariables());
  for (std::uint32_t i = 0; i < all.size(); ++i)
    all[i] = VarId{i};
  return restrictToComponent(sys, all, {});
}

} // namespace firwine
