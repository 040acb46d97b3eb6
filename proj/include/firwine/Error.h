//===- Error.h - Error reporting for the width solver -----------*- C++ -*-===//
//
// All recoverable failures in the library are reported by throwing
// firwine::Error. The kind lets callers (notably the CLI) map a failure onto
// an exit code without string matching.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_ERROR_H
#define FIRWINE_ERROR_H

#include <stdexcept>
#include <string>

namespace firwine {

enum class ErrorKind {
  MalformedExpr,
  Overflow,
  NotConjunctive,
  NotNonexpansive,
  UnsupportedDynamicShift,
  MissingSubstitution,
  LengthMismatch,
  Syntax,
  UnsupportedConstruct,
  UnsupportedOp,
  TypeMismatch,
  UnboundReference,
  Io,
  Internal,
};

const char *toString(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace firwine

#endif // FIRWINE_ERROR_H
