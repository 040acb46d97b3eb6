//===- Lexer.cpp - FIRRTL tokens -----------------------------------------===//

#include "firwine/firrtl/Lexer.h"
#include "firwine/Error.h"

#include <cctype>

namespace firwine::fir {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string &msg) {
  throw Error(ErrorKind::Syntax,
              std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool identStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::size_t pos = 0, line = 0;
    while (pos < src_.size()) {
      std::size_t nl = src_.find('\n', pos);
      std::size_t end = nl == std::string_view::npos ? src_.size() : nl;
      ++line;
      lexLine(pos, end, line);
      pos = end + 1;
    }
    Loc eof{line + 1, 1};
    while (levels_.size() > 1) {
      levels_.pop_back();
      push(Token::Kind::Dedent, "", eof, src_.size(), src_.size());
    }
    push(Token::Kind::Eof, "", eof, src_.size(), src_.size());
    return std::move(toks_);
  }

private:
  void push(Token::Kind k, std::string text, Loc loc, std::size_t off,
            std::size_t end) {
    toks_.push_back(Token{k, std::move(text), loc, off, end});
  }

  void lexLine(std::size_t begin, std::size_t end, std::size_t line) {
    std::size_t p = begin;
    while (p < end && src_[p] == ' ')
      ++p;
    if (p < end && src_[p] == '\t')
      fail(line, p - begin + 1, "tabs are not allowed");
    std::size_t indent = p - begin;
    // Blank and comment-only lines do not affect indentation.
    std::size_t q = p;
    while (q < end && (src_[q] == ' ' || src_[q] == '\r'))
      ++q;
    if (q == end || src_[q] == ';')
      return;
    if (toks_.empty() && src_.substr(p, 6) == "FIRRTL")
      return; // version line

    if (indent > levels_.back()) {
      if (unit_ == 0)
        unit_ = indent;
      if (indent % unit_ != 0)
        fail(line, 1, "indentation is not a multiple of " +
                          std::to_string(unit_) + " spaces");
      levels_.push_back(indent);
      push(Token::Kind::Indent, "", {line, 1}, p, p);
    } else {
      while (indent < levels_.back()) {
        levels_.pop_back();
        push(Token::Kind::Dedent, "", {line, 1}, p, p);
      }
      if (indent != levels_.back())
        fail(line, 1, "inconsistent dedent");
    }

    while (p < end) {
      char c = src_[p];
      Loc loc{line, p - begin + 1};
      if (c == ' ' || c == '\r') {
        ++p;
      } else if (c == '\t') {
        fail(line, loc.col, "tabs are not allowed");
      } else if (c == ';') {
        break;
      } else if (c == '@' && p + 1 < end && src_[p + 1] == '[') {
        std::size_t close = src_.find(']', p);
        if (close == std::string_view::npos || close > end)
          fail(line, loc.col, "unterminated source locator");
        p = close + 1;
      } else if (identStart(c)) {
        std::size_t s = p;
        while (p < end && identChar(src_[p]))
          ++p;
        push(Token::Kind::Ident, std::string(src_.substr(s, p - s)), loc, s, p);
      } else if (digit(c) || (c == '-' && p + 1 < end && digit(src_[p + 1]))) {
        std::size_t s = p;
        if (c == '-')
          ++p;
        if (src_[p] == '0' && p + 1 < end &&
            std::string_view("xobdh").find(src_[p + 1]) != std::string_view::npos) {
          p += 2;
          if (p < end && (src_[p] == '-' || src_[p] == '+'))
            ++p;
        }
        while (p < end && std::isalnum(static_cast<unsigned char>(src_[p])))
          ++p;
        push(Token::Kind::Int, std::string(src_.substr(s, p - s)), loc, s, p);
      } else if (c == '"') {
        std::size_t s = p++;
        std::string text;
        while (p < end && src_[p] != '"') {
          if (src_[p] == '\\' && p + 1 < end)
            text += src_[p++];
          text += src_[p++];
        }
        if (p >= end)
          fail(line, loc.col, "unterminated string");
        ++p;
        push(Token::Kind::String, std::move(text), loc, s, p);
      } else {
        std::string_view two = src_.substr(p, 2);
        if (p + 1 < end && (two == "<=" || two == "<-" || two == "=>")) {
          push(Token::Kind::Punct, std::string(two), loc, p, p + 2);
          p += 2;
        } else if (std::string_view(":,.()[]{}<>=%-").find(c) !=
                   std::string_view::npos) {
          push(Token::Kind::Punct, std::string(1, c), loc, p, p + 1);
          ++p;
        } else {
          fail(line, loc.col, std::string("unexpected character '") + c + "'");
        }
      }
    }
    push(Token::Kind::Newline, "", {line, end - begin + 1}, end, end);
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::vector<std::size_t> levels_{0};
  std::size_t unit_ = 0;
};

} // namespace

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

} // namespace firwine::fir
