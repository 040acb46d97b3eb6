//===- Driver.h - Command-line driver ---------------------------*- C++ -*-===//

#ifndef FIRWINE_TOOLS_DRIVER_H
#define FIRWINE_TOOLS_DRIVER_H

#include <iosfwd>

namespace firwine {

/// Exit codes: 0 sat, 1 unsat, 2 usage / input errors, 3 internal errors.
int runCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

} // namespace firwine

#endif // FIRWINE_TOOLS_DRIVER_H
