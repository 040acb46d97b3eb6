//===- Lexer.h - FIRRTL tokens ----------------------------------*- C++ -*-===//
//
// Produces INDENT / DEDENT / NEWLINE tokens from leading whitespace. The
// indent unit is fixed by the first indented line; tabs are rejected.
// Comments (';') and source locators ('@[...]') are dropped.
//
//===----------------------------------------------------------------------===//

#ifndef FIRWINE_FIRRTL_LEXER_H
#define FIRWINE_FIRRTL_LEXER_H

#include "firwine/firrtl/Ast.h"

#include <string_view>

namespace firwine::fir {

struct Token {
  enum class Kind {
    Ident,
    Int,    // decimal or 0x/0o/0b/0d radix literal, text kept verbatim
    String, // contents without quotes
    Punct,  // : , . ( ) [ ] { } < > = <= <- =>
    Newline,
    Indent,
    Dedent,
    Eof,
  };
  Kind kind = Kind::Eof;
  std::string text;
  Loc loc;
  std::size_t offset = 0; // byte offset of the first character
  std::size_t end = 0;    // one past the last character
};

/// Throws Error(Syntax) with "line:col: message".
std::vector<Token> lex(std::string_view source);

} // namespace firwine::fir

#endif // FIRWINE_FIRRTL_LEXER_H
