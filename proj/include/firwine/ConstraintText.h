//===- ConstraintText.h - Textual constraint files --------------*- C++ -*-===//
//
// One inequality per line:
//
//   x1 >= 2*x2 - 4
//   x3 >= min(x1 + 1, 7)
//   w  >= y + 2^s - 1
//
// '#' starts a comment. Variables are declared on first use.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_CONSTRAINTTEXT_H
#define FIRWINE_CONSTRAINTTEXT_H

#include "firwine/Constraint.h"

#include <string_view>

namespace firwine {

/// Throws Error(Syntax) with "line:col: message".
FirwineSystem parseConstraints(std::string_view text);

/// Inverse of parseConstraints, one inequality per line.
std::string printConstraints(const FirwineSystem &sys);

} // namespace firwine

#endif // FIRWINE_CONSTRAINTTEXT_H
