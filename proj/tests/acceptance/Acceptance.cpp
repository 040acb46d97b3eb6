// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "firwine/BranchAndBound.h"
#include "firwine/ConstraintText.h"
#include "firwine/DepGraph.h"
#include "firwine/MaxFloydWarshall.h"
#include "firwine/Oracle.h"
#include "firwine/SccSystem.h"
#include "firwine/Solver.h"
#include "firwine/firrtl/Extract.h"
#include "firwine/firrtl/Parser.h"

#include "Random.h"
#include "WidthTable.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace firwine;
using firwine::testing::Rng;
using firwine::testing::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string readFixture(const std::string &name) {
  std::ifstream in(std::string(FIRWINE_FIXTURE_DIR) + "/" + name);
  if (!in)
    throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string show(std::span<const Int> a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// Collects the first failure message of a criterion.
struct Outcome {
  std::string failure;
  void fail(const std::string &msg) {
    if (failure.empty())
      failure = msg;
  }
  bool ok() const { return failure.empty(); }
};

Assignment byName(const FirwineSystem &sys, const Assignment &a,
                  const std::vector<std::string> &names) {
  Assignment out;
  for (const auto &n : names)
    out.push_back(a[sys.lookup(n)->index]);
  return out;
}

bool matrixIs(const MaxDistMatrix &w, const std::vector<std::vector<Int>> &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (w.at(i, j) != m[i][j])
        return false;
  return w.size() == m.size();
}

//===----------------------------------------------------------------------===//

Outcome goldenExamples() {
  Outcome o;
  auto t0 = Clock::now();

  auto r = inferWidth(parseConstraints(readFixture("unique.txt")));
  if (!r.sat || r.least != Assignment{0, 1})
    o.fail("unique-solution example");
  r = inferWidth(parseConstraints(readFixture("doubling.txt")));
  if (r.sat)
    o.fail("x >= 2x, x >= 1 should be unsat");

  auto phi2 = parseConstraints(readFixture("phi2.txt"));
  r = inferWidth(phi2);
  if (!r.sat || r.least != Assignment{0, 0, 1})
    o.fail("phi2 least " + show(r.least));
  auto scc2 = wholeSystem(phi2);
  if (lowerBounds(scc2) != std::vector<Int>{0, 0, 1})
    o.fail("phi2 lower bounds");
  auto ub = computeUpperBounds(scc2);
  if (!ub || *ub != std::vector<Int>{6, 5, 7})
    o.fail("phi2 upper bounds");
  if (ub) {
    Assignment a(3);
    for (a[0] = 0; a[0] <= 50; ++a[0])
      for (a[1] = 0; a[1] <= 50; ++a[1])
        for (a[2] = 0; a[2] <= 50; ++a[2])
          if (satisfies(phi2, a).ok())
            for (int i = 0; i < 3; ++i)
              if (a[i] > (*ub)[i])
                o.fail("phi2 upper bound unsound at " + show(a));
  }

  auto ring3 = parseConstraints(readFixture("maxfw.txt"));
  auto p = buildWeightedGraph(wholeSystem(ring3));
  auto fw = maxFloydWarshall(p.graph);
  if (fw.positiveCycle() ||
      !matrixIs(*fw.matrix, {{0, 1, 1}, {-1, 0, 0}, {-1, 0, 0}}))
    o.fail("maxFW matrix of the nonexpansive example");
  r = inferWidth(ring3);
  if (!r.sat || r.least != Assignment{2, 1, 1})
    o.fail("nonexpansive example least " + show(r.least));

  auto phi3 = parseConstraints(readFixture("phi3.txt"));
  r = inferWidth(phi3);
  if (!r.sat || byName(phi3, r.least, {"x1", "x2", "x3", "x4", "x5", "x6", "x7"}) !=
                    Assignment{0, 1, 1, 1, 2, 1, 1})
    o.fail("phi3 least " + show(r.least));
  auto g3 = buildGraph(phi3);
  auto d3 = tarjanScc(g3);
  std::vector<std::vector<std::string>> order;
  for (const auto &c : d3.components) {
    order.emplace_back();
    for (VarId v : c)
      order.back().push_back(phi3.name(v));
  }
  if (order != std::vector<std::vector<std::string>>{
                   {"x7"}, {"x3", "x5", "x6"}, {"x4"}, {"x1", "x2"}})
    o.fail("phi3 SCC order");
  std::vector<std::optional<Int>> solved(phi3.numVariables());
  solved[phi3.lookup("x4")->index] = 1;
  std::vector<VarId> c2{*phi3.lookup("x3"), *phi3.lookup("x5"), *phi3.lookup("x6")};
  auto p2 = buildWeightedGraph(restrictToComponent(phi3, c2, solved));
  auto fw2 = maxFloydWarshall(p2.graph);
  if (fw2.positiveCycle() ||
      !matrixIs(*fw2.matrix, {{0, -1, 0}, {1, 0, 1}, {0, -1, 0}}))
    o.fail("phi3 C2 matrix");

  auto comb = fir::extractConstraints(fir::parse(readFixture("CombWhen.fir")));
  r = inferWidth(comb.system);
  if (!r.sat || r.least[comb.system.lookup("CombWhen.w")->index] != 2)
    o.fail("CombWhen w");
  auto circA = fir::extractConstraints(fir::parse(readFixture("A.fir")));
  r = inferWidth(circA.system);
  if (!r.sat || r.least[circA.system.lookup("A.x")->index] != 5 ||
      r.least[circA.system.lookup("A.out")->index] != 5)
    o.fail("circuit A widths");

  double s = secondsSince(t0);
  if (s >= 1.0)
    o.fail("took " + std::to_string(s) + " s");
  return o;
}

Outcome oracleEquivalence() {
  Outcome o;
  auto t0 = Clock::now();
  Rng rng(20240601);
  firwine::testing::SystemShape shape;
  int sat = 0, unsat = 0;
  for (int iter = 0; iter < 10000 && o.ok(); ++iter) {
    auto sys = firwine::testing::randomSystem(rng, shape);
    auto r = inferWidth(sys);
    auto k = kleeneLfp(sys, 1000000);
    if (r.sat != (k.status == OracleStatus::Sat)) {
      o.fail("verdict differs on\n" + printConstraints(sys));
      break;
    }
    if (r.sat) {
      ++sat;
      if (r.least != k.values)
        o.fail("least differs on\n" + printConstraints(sys));
    } else {
      ++unsat;
      if (exhaustiveLeast(sys, 50).status != OracleStatus::NoSolutionInBox)
        o.fail("box search found a solution for an unsat system\n" +
               printConstraints(sys));
    }
  }
  double s = secondsSince(t0);
  std::cout << "    " << sat << " sat, " << unsat << " unsat, " << s << " s\n";
  if (s >= 60.0)
    o.fail("took " + std::to_string(s) + " s");
  return o;
}

Outcome minClosure() {
  Outcome o;
  Rng rng(77);
  firwine::testing::SystemShape shape;
  int systems = 0;
  while (systems < 1000 && o.ok()) {
    auto sys = firwine::testing::randomSystem(rng, shape);
    auto r = inferWidth(sys);
    if (!r.sat)
      continue;
    ++systems;
    auto randomSolution = [&] {
      for (int attempt = 0; attempt < 50; ++attempt) {
        Assignment a = r.least;
        for (auto &x : a)
          x += uniform(rng, 0, 8);
        if (satisfies(sys, a).ok())
          return a;
      }
      return r.least;
    };
    for (int pair = 0; pair < 10; ++pair) {
      Assignment a = randomSolution(), b = randomSolution();
      if (!satisfies(sys, pointwiseMin(a, b)).ok())
        o.fail("min of " + show(a) + " and " + show(b) + " violates\n" +
               printConstraints(sys));
    }
  }
  return o;
}

Outcome pathDominance() {
  Outcome o;
  Rng rng(4242);
  for (int iter = 0; iter < 1000 && o.ok(); ++iter) {
    auto g = firwine::testing::randomWeightedGraph(rng, 6, 5);
    auto r = maxFloydWarshall(g);
    bool cyc = firwine::testing::hasPositiveSimpleCycle(g);
    if (r.positiveCycle() != cyc) {
      o.fail("positive-cycle verdict differs at graph " + std::to_string(iter));
      break;
    }
    if (cyc)
      continue;
    auto best = firwine::testing::bruteMaxPaths(g);
    for (std::size_t i = 0; i < g.numVertices; ++i)
      for (std::size_t j = 0; j < g.numVertices; ++j)
        if (r.matrix->at(i, j) != best[i][j])
          o.fail("matrix entry differs at graph " + std::to_string(iter));
  }
  return o;
}

// A strongly connected system on n variables: a ring of inequalities plus a
// few random extras, with at least one weight above one.
FirwineSystem randomExpansiveScc(Rng &rng) {
  FirwineSystem sys;
  int n = static_cast<int>(uniform(rng, 1, 4));
  for (int i = 0; i < n; ++i)
    sys.variable("x" + std::to_string(i));
  auto var = [](int i) { return VarId{static_cast<std::uint32_t>(i)}; };
  int heavy = static_cast<int>(uniform(rng, 0, n - 1));
  for (int i = 0; i < n; ++i) {
    Int a = i == heavy ? uniform(rng, 2, 3) : uniform(rng, 1, 3);
    LinearTerm t = LinearTerm::variable(var((i + 1) % n), a) +
                   LinearTerm(uniform(rng, -10, 10));
    sys.add(var(i), {t});
  }
  int extra = static_cast<int>(uniform(rng, 0, 3));
  for (int k = 0; k < extra; ++k) {
    LinearTerm t(uniform(rng, -10, 10));
    for (int j = 0; j < n; ++j)
      if (uniform(rng, 0, 2) == 0)
        t.addVariable(var(j), uniform(rng, 1, 3));
    sys.add(var(static_cast<int>(uniform(rng, 0, n - 1))), {t});
  }
  return sys;
}

Outcome babLeastness() {
  Outcome o;
  Rng rng(9001);
  int systems = 0, draws = 0;
  while (systems < 1000 && o.ok() && draws < 1000000) {
    ++draws;
    auto sys = randomExpansiveScc(rng);
    auto g = buildGraph(sys);
    auto d = tarjanScc(g);
    if (d.components.size() != 1 || !isExpansive(g, d, 0))
      continue;
    auto box = exhaustiveLeast(sys, 50);
    if (box.status != OracleStatus::Sat)
      continue;
    ++systems;
    auto scc = wholeSystem(sys);
    auto ub = computeUpperBounds(scc);
    if (!ub) {
      o.fail("no upper bounds for a satisfiable system\n" + printConstraints(sys));
      break;
    }
    bool decreasing = true;
    auto r = branchAndBound(scc, lowerBounds(scc), *ub, [&](const BabEvent &e) {
      if (e.parentMeasure >= 0 && e.measure >= e.parentMeasure)
        decreasing = false;
    });
    if (!r || *r != box.values)
      o.fail("BaB result differs from the box search\n" + printConstraints(sys));
    if (!decreasing)
      o.fail("BaB measure did not decrease\n" + printConstraints(sys));
  }
  if (systems < 1000)
    o.fail("only " + std::to_string(systems) + " systems generated");
  return o;
}

Outcome frontendRoundTrip() {
  Outcome o;
  const std::vector<std::string> required = {
      "WhenNested.fir", "BundleFlip.fir",   "Vector.fir",
      "RegReset.fir",   "DshlConstant.fir", "DshlAcyclic.fir"};
  for (const auto &f : required)
    if (!std::filesystem::exists(std::string(FIRWINE_FIXTURE_DIR) + "/" + f))
      o.fail("missing fixture " + f);
  int checked = 0;
  for (const auto &entry :
       std::filesystem::directory_iterator(FIRWINE_FIXTURE_DIR)) {
    if (entry.path().extension() != ".fir")
      continue;
    std::string name = entry.path().filename().string();
    std::string src = readFixture(name);
    fir::Extraction ex;
    try {
      ex = fir::extractConstraints(fir::parse(src));
    } catch (const Error &) {
      continue; // deliberately malformed input
    }
    auto r = inferWidth(ex.system);
    if (!r.sat)
      continue; // deliberately unsat input
    ++checked;
    std::string out = fir::applySolution(src, ex, r.least);
    try {
      auto again = fir::extractConstraints(fir::parse(out));
      if (again.system.numInequalities() != 0 || again.system.numVariables() != 0)
        o.fail(name + ": annotated output still has unknown widths");
      if (!failedChecks(again.checks, Assignment{}).empty())
        o.fail(name + ": annotated output fails a width check");
    } catch (const Error &e) {
      o.fail(name + ": annotated output does not parse: " + e.what());
    }
  }
  if (checked < static_cast<int>(required.size()))
    o.fail("too few fixtures checked");
  std::string table = firwine::testing::checkWidthTable();
  if (!table.empty())
    o.fail("width table row " + table);
  std::set<std::string> covered;
  for (const auto &row : firwine::testing::widthTableRows())
    covered.insert(row.op);
  for (auto op : fir::primOpNames())
    if (!covered.count(std::string(op)))
      o.fail("no table row for " + std::string(op));
  return o;
}

Outcome scaleSmoke() {
  Outcome o;
  Rng rng(555);

  // Sparse and acyclic: every inequality for x_i reads only larger indices.
  FirwineSystem acyclic;
  const int n = 5000;
  for (int i = 0; i < n; ++i)
    acyclic.variable("v" + std::to_string(i));
  for (int k = 0; k < 8000; ++k) {
    int i = static_cast<int>(k < n ? k : uniform(rng, 0, n - 2));
    LinearTerm t(uniform(rng, -10, 10));
    if (i < n - 1) {
      int j = static_cast<int>(uniform(rng, i + 1, std::min(n - 1, i + 50)));
      t.addVariable(VarId{static_cast<std::uint32_t>(j)}, 1);
    }
    acyclic.add(VarId{static_cast<std::uint32_t>(i)}, {t});
  }
  auto t0 = Clock::now();
  auto r = inferWidth(acyclic);
  double s1 = secondsSince(t0);
  if (!r.sat)
    o.fail("acyclic system reported unsat");
  if (s1 >= 1.0)
    o.fail("acyclic system took " + std::to_string(s1) + " s");

  // 50 rings of 20 difference constraints with non-positive total weight,
  // chained together and read by 4000 acyclic variables.
  FirwineSystem rings;
  for (int i = 0; i < n; ++i)
    rings.variable("w" + std::to_string(i));
  auto var = [](int i) { return VarId{static_cast<std::uint32_t>(i)}; };
  for (int c = 0; c < 50; ++c) {
    int base = c * 20;
    for (int k = 0; k < 20; ++k) {
      int i = base + k, next = base + (k + 1) % 20;
      rings.add(var(i), {LinearTerm::variable(var(next)) + LinearTerm(uniform(rng, -3, 0))});
      rings.add(var(i), {LinearTerm(uniform(rng, 0, 12))});
      int chord = base + static_cast<int>(uniform(rng, 0, 19));
      if (chord != i)
        rings.add(var(i), {LinearTerm::variable(var(chord)) +
                           LinearTerm(uniform(rng, -5, -1))});
    }
    if (c + 1 < 50)
      rings.add(var(base), {LinearTerm::variable(var(base + 20)) + LinearTerm(2)});
  }
  for (int i = 1000; i < n; ++i) {
    int j = static_cast<int>(uniform(rng, 0, i - 1));
    rings.add(var(i), {LinearTerm::variable(var(j)) + LinearTerm(uniform(rng, -2, 3))});
  }
  t0 = Clock::now();
  r = inferWidth(rings);
  double s2 = secondsSince(t0);
  auto g = buildGraph(rings);
  auto d = tarjanScc(g);
  int ringCount = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    if (d.components[c].size() == 20 && !isExpansive(g, d, c))
      ++ringCount;
  if (ringCount != 50)
    o.fail("generator produced " + std::to_string(ringCount) + " rings");
  if (!r.sat)
    o.fail("ring system reported unsat");
  if (s2 >= 5.0)
    o.fail("ring system took " + std::to_string(s2) + " s");
  std::cout << "    acyclic " << s1 << " s, rings " << s2 << " s\n";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"golden examples", goldenExamples},
      {"oracle equivalence", oracleEquivalence},
      {"min-closure", minClosure},
      {"maxFW path dominance", pathDominance},
      {"BaB leastness", babLeastness},
      {"frontend round-trip", frontendRoundTrip},
      {"scale smoke test", scaleSmoke},
  };
  int failed = 0;
  int index = 0;
  for (const auto &c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (o.ok()) {
      std::cout << "PASS " << index << " " << c.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << index << " " << c.name << ": " << o.failure << "\n";
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
