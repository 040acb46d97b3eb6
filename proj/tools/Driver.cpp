//===- Driver.cpp - Command-line driver ----------------------------------===//

#include "Driver.h"

#include "firwine/ConstraintText.h"
#include "firwine/DepGraph.h"
#include "firwine/LpEmitter.h"
#include "firwine/Oracle.h"
#include "firwine/Solver.h"
#include "firwine/firrtl/Extract.h"
#include "firwine/firrtl/Parser.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace firwine {

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kSat = 0, kUnsat = 1, kUsage = 2, kInternal = 3 };

struct Config {
  std::string input;
  std::string output;
  bool json = false;
  bool strict = false;
  bool trace = false;
  bool dot = false;
  Int cutoff = 1000000;
  Int bound = 0;
};

struct Loaded {
  std::string text;
  bool firrtl = false;
  FirwineSystem system;
  std::vector<ConstantCheck> checks;
  std::optional<fir::Extraction> extraction;
};

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const Config &cfg) {
  Loaded l;
  l.text = readFile(cfg.input);
  l.firrtl = std::filesystem::path(cfg.input).extension() == ".fir";
  if (l.firrtl) {
    l.extraction = fir::extractConstraints(fir::parse(l.text));
    l.system = l.extraction->system;
    l.checks = l.extraction->checks;
  } else {
    l.system = parseConstraints(l.text);
  }
  return l;
}

Json widthsJson(const FirwineSystem &sys, const Assignment &a) {
  Json w = Json::object();
  for (std::size_t i = 0; i < sys.numVariables(); ++i)
    w[sys.names()[i]] = a[i];
  return w;
}

std::vector<std::string> names(const FirwineSystem &sys,
                               const std::vector<VarId> &vars) {
  std::vector<std::string> out;
  for (VarId v : vars)
    out.push_back(sys.name(v));
  return out;
}

int reportUnsat(const Config &cfg, const FirwineSystem &sys,
                const SolveResult &r, std::ostream &out, std::ostream &err) {
  if (cfg.json) {
    out << Json{{"status", "unsat"},
                {"reason", toString(r.reason)},
                {"scc", names(sys, r.scc)},
                {"detail", r.detail}}
               .dump(2)
        << '\n';
  }
  err << "unsat (" << toString(r.reason) << ")";
  if (!r.scc.empty()) {
    err << " in {";
    auto ns = names(sys, r.scc);
    for (std::size_t i = 0; i < ns.size(); ++i)
      err << (i ? ", " : "") << ns[i];
    err << "}";
  }
  err << ": " << r.detail << '\n';
  if (!r.scc.empty()) {
    err << "  involved constraints:\n";
    for (VarId v : r.scc)
      for (const auto &m : sys.inequalitiesFor(v))
        err << "    " << formatInequality(sys, m) << '\n';
  }
  return kUnsat;
}

void emit(const Config &cfg, const std::string &text, std::ostream &out) {
  if (cfg.output.empty())
    out << text;
  else
    writeFileAtomic(cfg.output, text);
}

int solveAndReport(const Config &cfg, Loaded &l, std::ostream &out,
                   std::ostream &err) {
  SolveOptions opts;
  if (cfg.trace)
    opts.trace = &err;
  SolveResult r = inferWidth(l.system, opts);
  if (!r.sat)
    return reportUnsat(cfg, l.system, r, out, err);

  auto failed = failedChecks(l.checks, r.least);
  std::vector<std::string> warnings;
  for (const auto *c : failed)
    warnings.push_back(c->what + " receives a wider value (" +
                       std::to_string(evaluate(c->rhs, r.least)) + " bits)");
  for (const auto &w : warnings)
    err << "warning: " << w << '\n';
  if (cfg.strict && !failed.empty()) {
    SolveResult conflict;
    conflict.reason = UnsatReason::ConstantConflict;
    conflict.detail = warnings.front();
    return reportUnsat(cfg, l.system, conflict, out, err);
  }

  if (cfg.json) {
    Json j{{"status", "sat"}, {"widths", widthsJson(l.system, r.least)}};
    if (l.extraction) {
      Json leaves = Json::object();
      for (const auto &leaf : l.extraction->leaves) {
        if (leaf.known)
          leaves[leaf.name] = *leaf.known;
        else if (leaf.var)
          leaves[leaf.name] = r.least[leaf.var->index];
      }
      j["leaves"] = leaves;
      j["warnings"] = warnings;
    }
    emit(cfg, j.dump(2) + "\n", out);
  } else if (l.extraction) {
    emit(cfg, fir::applySolution(l.text, *l.extraction, r.least), out);
  } else {
    std::string text;
    for (std::size_t i = 0; i < l.system.numVariables(); ++i)
      text += l.system.names()[i] + " = " + std::to_string(r.least[i]) + "\n";
    emit(cfg, text, out);
  }
  return kSat;
}

int cmdOracle(const Config &cfg, std::ostream &out, std::ostream &err) {
  Loaded l = load(cfg);
  OracleResult k = kleeneLfp(l.system, cfg.cutoff);
  Json j = Json::object();
  bool sat = k.status == OracleStatus::Sat;
  if (sat)
    j["kleene"] = {{"status", "sat"}, {"widths", widthsJson(l.system, k.values)}};
  else
    j["kleene"] = {{"status", "diverged"}, {"cutoff", cfg.cutoff}};
  if (cfg.bound > 0) {
    OracleResult e = exhaustiveLeast(l.system, cfg.bound);
    if (e.status == OracleStatus::Sat)
      j["exhaustive"] = {{"status", "sat"},
                         {"widths", widthsJson(l.system, e.values)}};
    else
      j["exhaustive"] = {{"status", "no-solution-in-box"}, {"bound", cfg.bound}};
    sat = sat || e.status == OracleStatus::Sat;
  }
  if (cfg.json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto &[name, res] : j.items()) {
      out << name << ": " << res["status"].get<std::string>();
      if (res.contains("cutoff"))
        out << " (cutoff " << res["cutoff"] << ")";
      if (res.contains("bound"))
        out << " (bound " << res["bound"] << ")";
      out << '\n';
      if (res.contains("widths"))
        for (const auto &[v, w] : res["widths"].items())
          out << "  " << v << " = " << w << '\n';
    }
  }
  (void)err;
  return sat ? kSat : kUnsat;
}

int cmdParse(const Config &cfg, std::ostream &out) {
  Loaded l = load(cfg);
  if (cfg.dot) {
    std::ostringstream os;
    writeDot(os, l.system);
    emit(cfg, os.str(), out);
    return kSat;
  }
  if (cfg.json) {
    Json ineqs = Json::array();
    l.system.forEachInequality([&](const MinInequality &m) {
      ineqs.push_back(formatInequality(l.system, m));
    });
    Json checks = Json::array();
    for (const auto &c : l.checks)
      checks.push_back(c.what);
    emit(cfg,
         Json{{"variables", l.system.names()},
              {"inequalities", ineqs},
              {"checks", checks}}
                 .dump(2) +
             "\n",
         out);
    return kSat;
  }
  std::string text = printConstraints(l.system);
  for (const auto &c : l.checks)
    text += "# check: " + c.what + "\n";
  emit(cfg, text, out);
  return kSat;
}

int cmdEmitLp(const Config &cfg, std::ostream &out) {
  Loaded l = load(cfg);
  std::filesystem::path dir = cfg.output.empty() ? "." : cfg.output;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw Error(ErrorKind::Io, "cannot create " + dir.string());
  auto stem = std::filesystem::path(cfg.input).stem().string();
  for (const auto &p : emitLpFiles(l.system, dir, stem))
    out << p.string() << '\n';
  return kSat;
}

} // namespace

int runCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Least-width inference for FIRRTL and min-inequality systems"};
  app.require_subcommand(1);
  Config cfg;

  auto addCommon = [&](CLI::App *sub) {
    sub->add_option("input", cfg.input, "Input file (.fir or constraints)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_flag("--trace", cfg.trace, "Print solver steps to stderr");
  };
  CLI::App *infer = app.add_subcommand("infer", "Infer widths of a .fir file");
  addCommon(infer);
  infer->add_option("-o,--output", cfg.output, "Write the result here");
  infer->add_flag("--strict", cfg.strict, "Treat width check failures as unsat");

  CLI::App *solve = app.add_subcommand("solve", "Solve a constraint file");
  addCommon(solve);
  solve->add_option("-o,--output", cfg.output, "Write the result here");
  solve->add_flag("--strict", cfg.strict, "Treat width check failures as unsat");

  CLI::App *oracle =
      app.add_subcommand("oracle", "Run the reference fixpoint / box search");
  addCommon(oracle);
  oracle->add_option("--cutoff", cfg.cutoff, "Divergence cutoff")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--bound", cfg.bound, "Also search [0, N]^n")
      ->check(CLI::PositiveNumber);

  CLI::App *parseCmd =
      app.add_subcommand("parse", "Print the extracted constraints");
  addCommon(parseCmd);
  parseCmd->add_option("-o,--output", cfg.output, "Write the result here");
  parseCmd->add_flag("--dot", cfg.dot, "Dependency graph in Graphviz format");

  CLI::App *lp = app.add_subcommand("emit-lp", "Write one LP file per disjunct");
  addCommon(lp);
  lp->add_option("-o,--output", cfg.output, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSat;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (infer->parsed() || solve->parsed()) {
      Loaded l = load(cfg);
      return solveAndReport(cfg, l, out, err);
    }
    if (oracle->parsed())
      return cmdOracle(cfg, out, err);
    if (parseCmd->parsed())
      return cmdParse(cfg, out);
    if (lp->parsed())
      return cmdEmitLp(cfg, out);
  } catch (const Error &e) {
    err << "error: " << toString(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kInternal : kUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

} // namespace firwine
