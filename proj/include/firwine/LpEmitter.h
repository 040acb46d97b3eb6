//===- LpEmitter.h - CPLEX LP output for external ILP solvers ---*- C++ -*-===//
//
// One LP file per min-free disjunct: minimize the sum of all widths subject
// to  x - sum(aj * xj) >= a0,  with every variable a nonnegative integer.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_LPEMITTER_H
#define FIRWINE_LPEMITTER_H

#include "firwine/Constraint.h"

#include <filesystem>
#include <iosfwd>

namespace firwine {

/// LP identifiers: letters, digits and !"#$%&()/,.;?@_`'{}|~ , not starting
/// with a digit or period. Everything else becomes '_'.
std::string sanitizeLpName(std::string_view name);

/// Writes a min-free system. Throws NotConjunctive for min() and
/// MalformedExpr for 2^w addends, which LP cannot express.
void writeLp(std::ostream &os, const FirwineSystem &disjunct,
             std::size_t index);

/// Writes <dir>/<stem>.<i>.lp for every disjunct, each atomically, and
/// returns the paths.
std::vector<std::filesystem::path> emitLpFiles(const FirwineSystem &sys,
                                               const std::filesystem::path &dir,
                                               const std::string &stem);

/// Writes a whole file through a temporary and a rename.
void writeFileAtomic(const std::filesystem::path &path,
                     const std::string &contents);

} // namespace firwine

#endif // FIRWINE_LPEMITTER_H
