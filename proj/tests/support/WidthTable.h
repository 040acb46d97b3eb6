// Hand-encoded rows of the FIRRTL expression width table.

#ifndef FIRWINE_TESTS_WIDTHTABLE_H
#define FIRWINE_TESTS_WIDTHTABLE_H

#include "firwine/firrtl/Widths.h"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace firwine::testing {

using fir::Ground;

// Width table rows. wa and wb are the operand widths, n and m the integer
// parameters.
struct Row {
  std::string op;
  std::vector<Ground> args;
  std::vector<Int> ints;
  Ground result;
  std::function<Int(Int wa, Int wb)> width;
};

inline const Ground U = Ground::UInt, S = Ground::SInt, C = Ground::Clock,
             R = Ground::Reset, A = Ground::AsyncReset;

inline std::vector<Row> widthTableRows() {
  auto max = [](Int x, Int y) { return std::max(x, y); };
  return {
      {"add", {U, U}, {}, U, [=](Int a, Int b) { return max(a, b) + 1; }},
      {"add", {S, S}, {}, S, [=](Int a, Int b) { return max(a, b) + 1; }},
      {"sub", {U, U}, {}, U, [=](Int a, Int b) { return max(a, b) + 1; }},
      {"sub", {S, S}, {}, S, [=](Int a, Int b) { return max(a, b) + 1; }},
      {"mul", {U, U}, {}, U, [](Int a, Int b) { return a + b; }},
      {"mul", {S, S}, {}, S, [](Int a, Int b) { return a + b; }},
      {"div", {U, U}, {}, U, [](Int a, Int) { return a; }},
      {"div", {S, S}, {}, S, [](Int a, Int) { return a + 1; }},
      {"rem", {U, U}, {}, U, [](Int a, Int b) { return std::min(a, b); }},
      {"rem", {S, S}, {}, S, [](Int a, Int b) { return std::min(a, b); }},
      {"lt", {U, U}, {}, U, [](Int, Int) { return 1; }},
      {"leq", {S, S}, {}, U, [](Int, Int) { return 1; }},
      {"gt", {U, U}, {}, U, [](Int, Int) { return 1; }},
      {"geq", {S, S}, {}, U, [](Int, Int) { return 1; }},
      {"eq", {U, U}, {}, U, [](Int, Int) { return 1; }},
      {"neq", {S, S}, {}, U, [](Int, Int) { return 1; }},
      {"pad", {U}, {4}, U, [=](Int a, Int) { return max(a, 4); }},
      {"pad", {S}, {4}, S, [=](Int a, Int) { return max(a, 4); }},
      {"asUInt", {U}, {}, U, [](Int a, Int) { return a; }},
      {"asUInt", {S}, {}, U, [](Int a, Int) { return a; }},
      {"asUInt", {C}, {}, U, [](Int, Int) { return 1; }},
      {"asUInt", {R}, {}, U, [](Int, Int) { return 1; }},
      {"asUInt", {A}, {}, U, [](Int, Int) { return 1; }},
      {"asSInt", {U}, {}, S, [](Int a, Int) { return a; }},
      {"asSInt", {S}, {}, S, [](Int a, Int) { return a; }},
      {"asSInt", {C}, {}, S, [](Int, Int) { return 1; }},
      {"asSInt", {R}, {}, S, [](Int, Int) { return 1; }},
      {"asSInt", {A}, {}, S, [](Int, Int) { return 1; }},
      {"asClock", {U}, {}, C, [](Int, Int) { return 1; }},
      {"asAsyncReset", {U}, {}, A, [](Int, Int) { return 1; }},
      {"asReset", {U}, {}, R, [](Int, Int) { return 1; }},
      {"shl", {U}, {3}, U, [](Int a, Int) { return a + 3; }},
      {"shl", {S}, {3}, S, [](Int a, Int) { return a + 3; }},
      {"shr", {U}, {2}, U, [=](Int a, Int) { return max(a - 2, 0); }},
      {"shr", {S}, {2}, S, [=](Int a, Int) { return max(a - 2, 1); }},
      {"dshl", {U, U}, {}, U, [](Int a, Int b) { return a + (Int{1} << b) - 1; }},
      {"dshl", {S, U}, {}, S, [](Int a, Int b) { return a + (Int{1} << b) - 1; }},
      {"dshr", {U, U}, {}, U, [](Int a, Int) { return a; }},
      {"dshr", {S, U}, {}, S, [](Int a, Int) { return a; }},
      {"cvt", {U}, {}, S, [](Int a, Int) { return a + 1; }},
      {"cvt", {S}, {}, S, [](Int a, Int) { return a; }},
      {"neg", {U}, {}, S, [](Int a, Int) { return a + 1; }},
      {"neg", {S}, {}, S, [](Int a, Int) { return a + 1; }},
      {"not", {U}, {}, U, [](Int a, Int) { return a; }},
      {"not", {S}, {}, U, [](Int a, Int) { return a; }},
      {"and", {U, U}, {}, U, [=](Int a, Int b) { return max(a, b); }},
      {"or", {S, S}, {}, U, [=](Int a, Int b) { return max(a, b); }},
      {"xor", {U, U}, {}, U, [=](Int a, Int b) { return max(a, b); }},
      {"andr", {U}, {}, U, [](Int, Int) { return 1; }},
      {"orr", {S}, {}, U, [](Int, Int) { return 1; }},
      {"xorr", {U}, {}, U, [](Int, Int) { return 1; }},
      {"cat", {U, U}, {}, U, [](Int a, Int b) { return a + b; }},
      {"cat", {S, S}, {}, U, [](Int a, Int b) { return a + b; }},
      {"bits", {U}, {5, 2}, U, [](Int, Int) { return 4; }},
      {"head", {S}, {3}, U, [](Int, Int) { return 3; }},
      {"tail", {U}, {2}, U, [](Int a, Int) { return a - 2; }},
      {"tail", {S}, {2}, U, [](Int a, Int) { return a - 2; }},
  };
}

/// Returns a description of the first mismatch, or "" when every row agrees
/// with primOpWidth on operand widths 0..6.
inline std::string checkWidthTable() {
  for (const auto &row : widthTableRows()) {
    std::vector<fir::TypedWidth> args;
    for (std::size_t i = 0; i < row.args.size(); ++i)
      args.push_back({row.args[i], WidthExpr::var(VarId{static_cast<std::uint32_t>(i)})});
    fir::TypedWidth r = fir::primOpWidth(row.op, args, row.ints);
    if (r.kind != row.result)
      return row.op + ": result kind";
    for (Int wa = 0; wa <= 6; ++wa)
      for (Int wb = 0; wb <= 6; ++wb) {
        Assignment env{wa, wb};
        if (evaluate(r.width, env) != row.width(wa, wb))
          return row.op + "(" + std::to_string(wa) + ", " + std::to_string(wb) + ")";
      }
  }
  return "";
}

} // namespace firwine::testing

#endif // FIRWINE_TESTS_WIDTHTABLE_H
