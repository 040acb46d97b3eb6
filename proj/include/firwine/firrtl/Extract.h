//===- Extract.h - Width constraints of a FIRRTL circuit --------*- C++ -*-===//
//
// Aggregates are split into ground leaves. Every leaf declared without a
// width gets a variable named "<module>.<leaf path>"; every connect, register
// reset and node then contributes  sink >= width(source). Connects under
// `when` count unconditionally. Sinks with a declared width produce checks
// instead of constraints.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_FIRRTL_EXTRACT_H
#define FIRWINE_FIRRTL_EXTRACT_H

#include "firwine/firrtl/Ast.h"
#include "firwine/firrtl/Widths.h"

namespace firwine::fir {

/// One ground leaf of a type. `suffix` is the access path below the
/// flattened value (".a[2].b"); `flip` is the parity of flips along it.
struct FlatLeaf {
  std::string suffix;
  bool flip = false;
  const Type *ground = nullptr;
};

std::vector<FlatLeaf> flattenType(const Type &type);

struct Leaf {
  std::string name; // "<module>.<path>"
  Ground kind = Ground::UInt;
  std::optional<Int> known;
  std::optional<VarId> var;
};

/// Source offset where an inferred width is written, and the variables of
/// every leaf declared through that type token.
struct WidthSlot {
  std::size_t offset = 0;
  std::vector<VarId> vars;
};

struct Extraction {
  FirwineSystem system;
  std::vector<ConstantCheck> checks;
  std::vector<Leaf> leaves;
  std::vector<WidthSlot> slots; // sorted by offset
};

/// Throws UnboundReference, TypeMismatch, UnsupportedOp.
Extraction extractConstraints(const Circuit &circuit);

/// The source text with every missing declaration width filled in. Vector
/// elements share one type token, so it receives their largest width.
std::string applySolution(std::string_view source, const Extraction &ex,
                          std::span<const Int> widths);

} // namespace firwine::fir

#endif // FIRWINE_FIRRTL_EXTRACT_H
