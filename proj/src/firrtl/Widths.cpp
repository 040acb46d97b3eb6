//===- Widths.cpp - Result widths of FIRRTL expressions ------------------===//

#include "firwine/firrtl/Widths.h"

#include <algorithm>

namespace firwine::fir {

namespace {

using W = WidthExpr;

struct OpInfo {
  std::string_view name;
  std::size_t exprs, ints;
};

constexpr OpInfo kOps[] = {
    {"add", 2, 0},    {"sub", 2, 0},    {"mul", 2, 0},    {"div", 2, 0},
    {"rem", 2, 0},    {"lt", 2, 0},     {"leq", 2, 0},    {"gt", 2, 0},
    {"geq", 2, 0},    {"eq", 2, 0},     {"neq", 2, 0},    {"pad", 1, 1},
    {"asUInt", 1, 0}, {"asSInt", 1, 0}, {"asClock", 1, 0},
    {"asAsyncReset", 1, 0}, {"shl", 1, 1}, {"shr", 1, 1},
    {"dshl", 2, 0},   {"dshr", 2, 0},   {"cvt", 1, 0},    {"neg", 1, 0},
    {"not", 1, 0},    {"and", 2, 0},    {"or", 2, 0},     {"xor", 2, 0},
    {"andr", 1, 0},   {"orr", 1, 0},    {"xorr", 1, 0},   {"cat", 2, 0},
    {"bits", 1, 2},   {"head", 1, 1},   {"tail", 1, 1},   {"asReset", 1, 0},
};

bool isWidthless(Ground g) {
  return g == Ground::Clock || g == Ground::Reset || g == Ground::AsyncReset;
}

} // namespace

std::span<const std::string_view> primOpNames() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto &op : kOps)
      v.push_back(op.name);
    return v;
  }();
  return names;
}

bool hasVariables(const WidthExpr &e) {
  switch (e.kind()) {
  case W::Kind::Var:
    return true;
  case W::Kind::Const:
    return false;
  case W::Kind::Exp2:
    return hasVariables(e.lhs());
  default:
    return hasVariables(e.lhs()) || hasVariables(e.rhs());
  }
}

TypedWidth muxWidth(const TypedWidth &a, const TypedWidth &b) {
  return {a.kind, W::max(a.width, b.width)};
}

TypedWidth primOpWidth(std::string_view op, std::span<const TypedWidth> args,
                       std::span<const Int> ints) {
  const OpInfo *info = nullptr;
  for (const auto &o : kOps)
    if (o.name == op)
      info = &o;
  if (!info)
    throw Error(ErrorKind::UnsupportedOp,
                "operator '" + std::string(op) + "' has no width rule");
  if (args.size() != info->exprs || ints.size() != info->ints)
    throw Error(ErrorKind::TypeMismatch,
                "wrong number of operands for '" + std::string(op) + "'");

  const W &w1 = args[0].width;
  const Ground k1 = args[0].kind;
  auto n = [&](std::size_t i) { return ints[i]; };
  auto same = [&](W w) { return TypedWidth{k1, std::move(w)}; };
  auto uint = [](W w) { return TypedWidth{Ground::UInt, std::move(w)}; };
  auto sint = [](W w) { return TypedWidth{Ground::SInt, std::move(w)}; };

  if (op == "add" || op == "sub")
    return same(W::max(w1, args[1].width) + 1);
  if (op == "mul")
    return same(w1 + args[1].width);
  if (op == "div")
    return same(k1 == Ground::SInt ? w1 + 1 : w1);
  if (op == "rem")
    return same(W::min(w1, args[1].width));
  if (op == "lt" || op == "leq" || op == "gt" || op == "geq" || op == "eq" ||
      op == "neq")
    return uint(W::constant(1));
  if (op == "pad")
    return same(W::max(w1, W::constant(n(0))));
  if (op == "asUInt")
    return uint(isWidthless(k1) ? W::constant(1) : w1);
  if (op == "asSInt")
    return sint(isWidthless(k1) ? W::constant(1) : w1);
  if (op == "asClock")
    return {Ground::Clock, W::constant(1)};
  if (op == "asAsyncReset")
    return {Ground::AsyncReset, W::constant(1)};
  if (op == "asReset")
    return {Ground::Reset, W::constant(1)};
  if (op == "shl")
    return same(w1 + n(0));
  if (op == "shr")
    return same(W::max(w1 + (-n(0)),
                       W::constant(k1 == Ground::SInt ? 1 : 0)));
  if (op == "dshl")
    return same(w1 + W::exp2(args[1].width) + (-1));
  if (op == "dshr")
    return same(w1);
  if (op == "cvt")
    return sint(k1 == Ground::SInt ? w1 : w1 + 1);
  if (op == "neg")
    return sint(w1 + 1);
  if (op == "not")
    return uint(w1);
  if (op == "and" || op == "or" || op == "xor")
    return uint(W::max(w1, args[1].width));
  if (op == "andr" || op == "orr" || op == "xorr")
    return uint(W::constant(1));
  if (op == "cat")
    return uint(w1 + args[1].width);
  if (op == "bits") {
    if (n(0) < n(1) || n(1) < 0)
      throw Error(ErrorKind::TypeMismatch, "bits() needs hi >= lo >= 0");
    return uint(W::constant(n(0) - n(1) + 1));
  }
  if (op == "head")
    return uint(W::constant(n(0)));
  if (op == "tail")
    return uint(w1 + (-n(0)));
  throw Error(ErrorKind::Internal, "width rule missing for '" +
                                       std::string(op) + "'");
}

} // namespace firwine::fir
