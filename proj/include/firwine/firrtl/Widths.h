//===- Widths.h - Result widths of FIRRTL expressions -----------*- C++ -*-===//

#ifndef FIRWINE_FIRRTL_WIDTHS_H
#define FIRWINE_FIRRTL_WIDTHS_H

#include "firwine/Constraint.h"

#include <string_view>

namespace firwine::fir {

enum class Ground { UInt, SInt, Clock, Reset, AsyncReset };

struct TypedWidth {
  Ground kind = Ground::UInt;
  WidthExpr width = WidthExpr::constant(0);
};

/// Result kind and width of a primitive operation. Throws UnsupportedOp for
/// unknown operators and TypeMismatch for a wrong number of operands.
TypedWidth primOpWidth(std::string_view op, std::span<const TypedWidth> args,
                       std::span<const Int> ints);

/// Every operator primOpWidth accepts.
std::span<const std::string_view> primOpNames();

/// max(w_a, w_b); the kind follows the first operand.
TypedWidth muxWidth(const TypedWidth &a, const TypedWidth &b);

bool hasVariables(const WidthExpr &e);

} // namespace firwine::fir

#endif // FIRWINE_FIRRTL_WIDTHS_H
