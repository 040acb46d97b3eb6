//===- Ast.h - FIRRTL syntax tree -------------------------------*- C++ -*-===//

#ifndef FIRWINE_FIRRTL_AST_H
#define FIRWINE_FIRRTL_AST_H

#include "firwine/Arith.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace firwine::fir {

struct Loc {
  std::size_t line = 0, col = 0;
};

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Field {
  std::string name;
  bool flip = false;
  TypePtr type;
};

struct Type {
  enum class Kind { UInt, SInt, Clock, Reset, AsyncReset, Vector, Bundle };
  Kind kind = Kind::UInt;
  std::optional<Int> width; // UInt / SInt
  /// Byte offset just past the UInt/SInt keyword of a type written without a
  /// width; where an inferred width gets inserted.
  std::optional<std::size_t> widthSlot;
  TypePtr elem; // Vector
  Int length = 0;
  std::vector<Field> fields; // Bundle

  bool isGround() const { return kind != Kind::Vector && kind != Kind::Bundle; }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { UIntLit, SIntLit, Ref, SubField, SubIndex, Mux, ValidIf, PrimOp };
  Kind kind = Kind::Ref;
  Loc loc;
  std::optional<Int> width; // literals
  Int minWidth = 1;         // literals: smallest width holding the value
  std::string name;         // Ref name, SubField field, PrimOp operator
  Int index = 0;            // SubIndex
  std::vector<ExprPtr> args; // SubField/SubIndex base is args[0]
  std::vector<Int> ints;     // PrimOp integer parameters
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Stmt {
  enum class Kind { Wire, Reg, Inst, Node, Connect, IsInvalid, When, Skip };
  Kind kind = Kind::Skip;
  Loc loc;
  std::string name;   // Wire/Reg/Inst/Node
  TypePtr type;       // Wire/Reg
  std::string module; // Inst
  ExprPtr clock;      // Reg
  ExprPtr reset, init; // Reg with reset
  ExprPtr lhs, rhs;    // Connect (lhs is the sink), Node value is rhs
  ExprPtr target;      // IsInvalid
  ExprPtr cond;        // When
  Block thenBlock, elseBlock;
};

enum class Direction { Input, Output };

struct Port {
  Direction dir = Direction::Input;
  std::string name;
  TypePtr type;
  Loc loc;
};

struct Module {
  std::string name;
  bool external = false;
  std::vector<Port> ports;
  Block body;
  Loc loc;
};

struct Circuit {
  std::string name;
  std::vector<Module> modules;
};

} // namespace firwine::fir

#endif // FIRWINE_FIRRTL_AST_H
