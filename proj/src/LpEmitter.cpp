//===- LpEmitter.cpp - CPLEX LP output for external ILP solvers ----------===//

#include "firwine/LpEmitter.h"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace firwine {

std::string sanitizeLpName(std::string_view name) {
  static const std::string_view allowed = "!\"#$%&()/,.;?@_`'{}|~";
  std::string out;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) ||
              allowed.find(c) != std::string_view::npos;
    out += ok ? c : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) ||
      out[0] == '.')
    out.insert(out.begin(), '_');
  return out;
}

namespace {

// Sanitized names, made unique when sanitizing collapses two of them.
std::vector<std::string> lpNames(const FirwineSystem &sys) {
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const auto &n : sys.names()) {
    std::string s = sanitizeLpName(n);
    std::string candidate = s;
    for (int k = 1; used.count(candidate); ++k)
      candidate = s + "_" + std::to_string(k);
    used.insert(candidate);
    names.push_back(candidate);
  }
  return names;
}

} // namespace

void writeLp(std::ostream &os, const FirwineSystem &sys, std::size_t index) {
  auto names = lpNames(sys);
  os << "\\ disjunct " << index << '\n';
  os << "Minimize obj:";
  if (names.empty())
    os << " 0";
  for (std::size_t i = 0; i < names.size(); ++i)
    os << (i ? " + " : " ") << names[i];
  os << "\nSubject To\n";
  std::size_t row = 0;
  sys.forEachInequality([&](const MinInequality &m) {
    if (m.alternatives.size() != 1)
      throw Error(ErrorKind::NotConjunctive, "LP output needs a min-free system");
    const LinearTerm &t = m.alternatives.front();
    if (!t.expAddends().empty())
      throw Error(ErrorKind::MalformedExpr,
                  "2^w terms cannot be written as linear constraints");
    // lhs - sum(a * x) >= a0, merging the lhs into its own coefficient.
    std::map<std::uint32_t, Int> row_;
    row_[m.lhs.index] = 1;
    for (auto [v, a] : t.coeffs())
      row_[v.index] = checkedSub(row_[v.index], a);
    os << " c" << ++row << ':';
    bool any = false;
    for (auto [v, a] : row_) {
      if (a == 0)
        continue;
      if (any)
        os << (a < 0 ? " - " : " + ");
      else
        os << (a < 0 ? " -" : " ");
      Int mag = a < 0 ? -a : a;
      if (mag != 1)
        os << mag << ' ';
      os << names[v];
      any = true;
    }
    if (!any)
      os << " 0 " << names[m.lhs.index];
    os << " >= " << t.constant() << '\n';
  });
  os << "Generals\n";
  for (const auto &n : names)
    os << ' ' << n << '\n';
  os << "End\n";
}

void writeFileAtomic(const std::filesystem::path &path,
                     const std::string &contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out)
      throw Error(ErrorKind::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename to " + path.string());
  }
}

std::vector<std::filesystem::path> emitLpFiles(const FirwineSystem &sys,
                                               const std::filesystem::path &dir,
                                               const std::string &stem) {
  std::vector<std::filesystem::path> written;
  DisjunctEnumerator disjuncts(sys);
  std::size_t index = 0;
  while (auto d = disjuncts.next()) {
    std::ostringstream os;
    writeLp(os, *d, index);
    auto path = dir / (stem + "." + std::to_string(index) + ".lp");
    writeFileAtomic(path, os.str());
    written.push_back(path);
    ++index;
  }
  return written;
}

} // namespace firwine
