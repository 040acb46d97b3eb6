//===- Arith.h - Checked integer arithmetic ---------------------*- C++ -*-===//
//
// Widths and constants are exact 64-bit integers. Every operation that could
// leave that range throws Error(ErrorKind::Overflow) instead of wrapping.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_ARITH_H
#define FIRWINE_ARITH_H

#include "firwine/Error.h"

#include <cstdint>

namespace firwine {

using Int = std::int64_t;

inline Int checkedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int checkedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

/// 2^exponent. Negative exponents are malformed (they only arise from a
/// negative dshl shift width).
inline Int pow2(Int exponent) {
  if (exponent < 0)
    throw Error(ErrorKind::MalformedExpr, "negative exponent in 2^w");
  if (exponent >= 63)
    throw Error(ErrorKind::Overflow, "2^w exceeds the 64-bit range");
  return Int{1} << exponent;
}

/// Division rounding toward negative infinity. The divisor must be positive.
inline Int floorDiv(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && (num < 0))
    --q;
  return q;
}

} // namespace firwine

#endif // FIRWINE_ARITH_H
