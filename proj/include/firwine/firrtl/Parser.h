//===- Parser.h - FIRRTL parser ---------------------------------*- C++ -*-===//

#ifndef FIRWINE_FIRRTL_PARSER_H
#define FIRWINE_FIRRTL_PARSER_H

#include "firwine/firrtl/Ast.h"

#include <string_view>

namespace firwine::fir {

/// Throws Error(Syntax) with a line:col prefix, or
/// Error(UnsupportedConstruct) for memories, probes, analog types, partial
/// connects and dynamic indexing.
Circuit parse(std::string_view source);

/// Smallest widths of an integer literal written in FIRRTL syntax
/// ("-12", "0hFF", "b-101", ...): first for UInt, second for SInt.
std::pair<Int, Int> literalWidths(std::string_view text);

} // namespace firwine::fir

#endif // FIRWINE_FIRRTL_PARSER_H
