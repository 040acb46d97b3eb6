//===- Parser.cpp - FIRRTL parser ----------------------------------------===//

#include "firwine/firrtl/Parser.h"
#include "firwine/Error.h"
#include "firwine/firrtl/Lexer.h"

#include <algorithm>
#include <cctype>
#include <set>

namespace firwine::fir {

namespace {

struct LiteralValue {
  bool negative = false;
  std::vector<bool> bits; // magnitude, most significant first, no leading 0
};

LiteralValue parseLiteralValue(std::string_view text) {
  LiteralValue v;
  unsigned base = 10;
  auto takeSign = [&] {
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
      v.negative = text[0] == '-';
      text.remove_prefix(1);
    }
  };
  auto radix = [&](char c) -> unsigned {
    switch (c) {
    case 'h':
    case 'x':
      return 16;
    case 'o':
      return 8;
    case 'b':
      return 2;
    case 'd':
      return 10;
    }
    return 0;
  };
  takeSign();
  if (text.size() >= 2 && text[0] == '0' && radix(text[1])) {
    base = radix(text[1]);
    text.remove_prefix(2);
    takeSign();
  } else if (!text.empty() && radix(text[0])) {
    base = radix(text[0]);
    text.remove_prefix(1);
    takeSign();
  }
  if (text.empty())
    throw Error(ErrorKind::Syntax, "empty integer literal");
  std::vector<unsigned> digits;
  for (char c : text) {
    unsigned d;
    if (std::isdigit(static_cast<unsigned char>(c)))
      d = static_cast<unsigned>(c - '0');
    else if (std::isxdigit(static_cast<unsigned char>(c)))
      d = static_cast<unsigned>(std::tolower(c) - 'a' + 10);
    else if (c == '_')
      continue;
    else
      throw Error(ErrorKind::Syntax, "bad digit in literal '" +
                                         std::string(text) + "'");
    if (d >= base)
      throw Error(ErrorKind::Syntax, "bad digit in literal '" +
                                         std::string(text) + "'");
    digits.push_back(d);
  }
  // Repeated halving yields the binary digits least significant first.
  std::vector<bool> lsbFirst;
  while (std::any_of(digits.begin(), digits.end(),
                     [](unsigned d) { return d != 0; })) {
    unsigned rem = 0;
    for (auto &d : digits) {
      unsigned cur = rem * base + d;
      d = cur / 2;
      rem = cur % 2;
    }
    lsbFirst.push_back(rem != 0);
  }
  v.bits.assign(lsbFirst.rbegin(), lsbFirst.rend());
  return v;
}

Int toInt(const LiteralValue &v) {
  if (v.bits.size() > 62)
    throw Error(ErrorKind::Overflow, "integer parameter too large");
  Int r = 0;
  for (bool b : v.bits)
    r = r * 2 + (b ? 1 : 0);
  return v.negative ? -r : r;
}

const std::set<std::string, std::less<>> kUnsupportedStmts = {
    "mem",   "cmem",  "smem",           "attach",          "define",
    "force", "release", "force_initial", "release_initial", "read",
    "write", "rdwr",  "infer",          "mport",           "layerblock",
    "propassign", "match", "option"};

const std::set<std::string, std::less<>> kSkippedStmts = {
    "printf", "fprintf", "fflush", "stop", "assert", "assume", "cover",
    "intrinsic"};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Circuit circuit() {
    skipNewlines();
    Circuit c;
    expectWord("circuit");
    c.name = ident();
    expect(":");
    skipRestOfLine();
    expectKind(Token::Kind::Indent, "an indented module list");
    while (!at(Token::Kind::Dedent) && !at(Token::Kind::Eof)) {
      if (atNewline()) {
        advance();
        continue;
      }
      c.modules.push_back(module());
    }
    if (at(Token::Kind::Dedent))
      advance();
    skipNewlines();
    if (!at(Token::Kind::Eof))
      fail("unexpected input after the circuit");
    return c;
  }

private:
  const Token &peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Token::Kind k) const { return peek().kind == k; }
  bool atNewline() const { return at(Token::Kind::Newline); }
  bool atPunct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool atWord(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Ident && peek(k).text == w;
  }
  const Token &advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string &msg) const {
    const Token &t = peek();
    throw Error(ErrorKind::Syntax, std::to_string(t.loc.line) + ":" +
                                       std::to_string(t.loc.col) + ": " + msg);
  }
  [[noreturn]] void unsupported(const std::string &what) const {
    const Token &t = peek();
    throw Error(ErrorKind::UnsupportedConstruct,
                std::to_string(t.loc.line) + ":" + std::to_string(t.loc.col) +
                    ": " + what + " is not supported");
  }

  void expect(std::string_view p) {
    if (!atPunct(p))
      fail("expected '" + std::string(p) + "'");
    advance();
  }
  void expectWord(std::string_view w) {
    if (!atWord(w))
      fail("expected '" + std::string(w) + "'");
    advance();
  }
  void expectKind(Token::Kind k, const std::string &what) {
    if (!at(k))
      fail("expected " + what);
    advance();
  }
  std::string ident() {
    if (!at(Token::Kind::Ident))
      fail("expected an identifier");
    return advance().text;
  }
  Int integer() {
    if (!at(Token::Kind::Int))
      fail("expected an integer");
    return toInt(parseLiteralValue(advance().text));
  }
  void skipNewlines() {
    while (atNewline())
      advance();
  }
  void endOfLine() {
    if (!atNewline() && !at(Token::Kind::Eof) && !at(Token::Kind::Dedent))
      fail("expected end of line");
    if (atNewline())
      advance();
  }
  // Annotations and similar trailers we do not interpret.
  void skipRestOfLine() {
    while (!atNewline() && !at(Token::Kind::Eof))
      advance();
    if (atNewline())
      advance();
  }

  Module module() {
    Module m;
    m.loc = peek().loc;
    if (atWord("public"))
      advance();
    if (atWord("extmodule"))
      m.external = true;
    else if (!atWord("module"))
      fail("expected 'module' or 'extmodule'");
    advance();
    m.name = ident();
    expect(":");
    skipRestOfLine();
    if (!at(Token::Kind::Indent))
      return m;
    advance();
    while (!at(Token::Kind::Dedent) && !at(Token::Kind::Eof)) {
      if (atNewline()) {
        advance();
      } else if (atWord("input") || atWord("output")) {
        Port p;
        p.loc = peek().loc;
        p.dir = advance().text == "input" ? Direction::Input : Direction::Output;
        p.name = ident();
        expect(":");
        p.type = type();
        endOfLine();
        m.ports.push_back(std::move(p));
      } else if (m.external) {
        skipRestOfLine(); // defname, parameter
      } else {
        statement(m.body);
      }
    }
    if (at(Token::Kind::Dedent))
      advance();
    return m;
  }

  TypePtr type() {
    auto t = std::make_shared<Type>();
    const Token &head = peek();
    if (atPunct("{")) {
      advance();
      t->kind = Type::Kind::Bundle;
      while (!atPunct("}")) {
        Field f;
        if (atWord("flip")) {
          f.flip = true;
          advance();
        }
        f.name = at(Token::Kind::Int) ? advance().text : ident();
        expect(":");
        f.type = type();
        t->fields.push_back(std::move(f));
        if (!atPunct("}"))
          expect(",");
      }
      advance();
    } else if (atWord("UInt") || atWord("SInt")) {
      t->kind = head.text == "UInt" ? Type::Kind::UInt : Type::Kind::SInt;
      advance();
      if (atPunct("<")) {
        advance();
        t->width = integer();
        expect(">");
        if (*t->width < 0)
          fail("negative width");
      } else {
        t->widthSlot = head.end;
      }
    } else if (atWord("Clock")) {
      advance();
      t->kind = Type::Kind::Clock;
    } else if (atWord("Reset")) {
      advance();
      t->kind = Type::Kind::Reset;
    } else if (atWord("AsyncReset")) {
      advance();
      t->kind = Type::Kind::AsyncReset;
    } else if (atWord("Analog")) {
      unsupported("Analog type");
    } else if (atWord("Probe") || atWord("RWProbe") || atWord("const") ||
               atWord("Integer") || atWord("String") || atWord("Bool") ||
               atWord("List") || atWord("Path") || atWord("AnyRef") ||
               atWord("Double")) {
      unsupported("type '" + head.text + "'");
    } else {
      fail("expected a type");
    }
    TypePtr result = t;
    while (atPunct("[")) {
      advance();
      auto v = std::make_shared<Type>();
      v->kind = Type::Kind::Vector;
      v->elem = result;
      v->length = integer();
      if (v->length < 0)
        fail("negative vector length");
      expect("]");
      result = v;
    }
    return result;
  }

  // Body of a when/else: an indented block or a single statement on the
  // same line.
  void block(Block &out) {
    if (atNewline()) {
      advance();
      skipNewlines();
      expectKind(Token::Kind::Indent, "an indented block");
      while (!at(Token::Kind::Dedent) && !at(Token::Kind::Eof)) {
        if (atNewline())
          advance();
        else
          statement(out);
      }
      if (at(Token::Kind::Dedent))
        advance();
    } else {
      statement(out);
    }
  }

  void statement(Block &out) {
    Stmt s;
    s.loc = peek().loc;
    const Token &head = peek();
    if (head.kind == Token::Kind::Ident && kUnsupportedStmts.count(head.text) &&
        !atPunct("<=", 1) && !atPunct(".", 1) && !atPunct("[", 1) &&
        !atWord("is", 1))
      unsupported("statement '" + head.text + "'");
    if (head.kind == Token::Kind::Ident && kSkippedStmts.count(head.text) &&
        atPunct("(", 1)) {
      skipRestOfLine();
      s.kind = Stmt::Kind::Skip;
      out.push_back(std::move(s));
      return;
    }

    if (atWord("wire") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Wire;
      s.name = ident();
      expect(":");
      s.type = type();
      endOfLine();
    } else if (atWord("reg") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Reg;
      s.name = ident();
      expect(":");
      s.type = type();
      expect(",");
      s.clock = expr();
      if (atWord("with")) {
        advance();
        expect(":");
        bool indented = false;
        if (atNewline()) {
          advance();
          expectKind(Token::Kind::Indent, "a reset specification");
          indented = true;
        }
        bool paren = atPunct("(");
        if (paren)
          advance();
        expectWord("reset");
        expect("=>");
        expect("(");
        s.reset = expr();
        expect(",");
        s.init = expr();
        expect(")");
        if (paren)
          expect(")");
        endOfLine();
        if (indented) {
          skipNewlines();
          expectKind(Token::Kind::Dedent, "end of reset specification");
        }
      } else {
        endOfLine();
      }
    } else if (atWord("regreset") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Reg;
      s.name = ident();
      expect(":");
      s.type = type();
      expect(",");
      s.clock = expr();
      expect(",");
      s.reset = expr();
      expect(",");
      s.init = expr();
      endOfLine();
    } else if (atWord("inst") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Inst;
      s.name = ident();
      expectWord("of");
      s.module = ident();
      endOfLine();
    } else if (atWord("node") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Node;
      s.name = ident();
      expect("=");
      s.rhs = expr();
      endOfLine();
    } else if (atWord("connect") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Connect;
      s.lhs = reference();
      expect(",");
      s.rhs = expr();
      endOfLine();
    } else if (atWord("invalidate") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::IsInvalid;
      s.target = reference();
      endOfLine();
    } else if (atWord("when") && !isConnectAhead()) {
      whenStatement(s);
    } else if (atWord("skip") && !isConnectAhead()) {
      advance();
      s.kind = Stmt::Kind::Skip;
      endOfLine();
    } else {
      ExprPtr target = reference();
      if (atPunct("<=")) {
        advance();
        s.kind = Stmt::Kind::Connect;
        s.lhs = target;
        s.rhs = expr();
      } else if (atPunct("<-")) {
        unsupported("partial connect '<-'");
      } else if (atWord("is")) {
        advance();
        expectWord("invalid");
        s.kind = Stmt::Kind::IsInvalid;
        s.target = target;
      } else {
        fail("expected a statement");
      }
      endOfLine();
    }
    out.push_back(std::move(s));
  }

  // A keyword used as a component name: "reg <= x", "node.a <= ...".
  bool isConnectAhead() const {
    return atPunct("<=", 1) || atPunct("<-", 1) || atPunct(".", 1) ||
           atPunct("[", 1) || atWord("is", 1);
  }

  void whenStatement(Stmt &s) {
    advance();
    s.kind = Stmt::Kind::When;
    s.cond = expr();
    expect(":");
    block(s.thenBlock);
    skipNewlines();
    if (atWord("else")) {
      advance();
      if (atWord("when")) {
        Stmt nested;
        nested.loc = peek().loc;
        whenStatement(nested);
        s.elseBlock.push_back(std::move(nested));
      } else {
        expect(":");
        block(s.elseBlock);
      }
    }
  }

  ExprPtr reference() {
    auto base = std::make_shared<Expr>();
    base->loc = peek().loc;
    base->kind = Expr::Kind::Ref;
    base->name = ident();
    return accessors(base);
  }

  ExprPtr accessors(ExprPtr e) {
    for (;;) {
      if (atPunct(".")) {
        advance();
        auto f = std::make_shared<Expr>();
        f->loc = peek().loc;
        f->kind = Expr::Kind::SubField;
        f->name = at(Token::Kind::Int) ? advance().text : ident();
        f->args.push_back(e);
        e = f;
      } else if (atPunct("[")) {
        advance();
        if (!at(Token::Kind::Int) || !atPunct("]", 1))
          unsupported("dynamic indexing");
        auto ix = std::make_shared<Expr>();
        ix->loc = peek().loc;
        ix->kind = Expr::Kind::SubIndex;
        ix->index = integer();
        ix->args.push_back(e);
        expect("]");
        e = ix;
      } else {
        return e;
      }
    }
  }

  ExprPtr literal(Expr::Kind kind) {
    auto e = std::make_shared<Expr>();
    e->loc = peek().loc;
    e->kind = kind;
    advance();
    if (atPunct("<")) {
      advance();
      e->width = integer();
      expect(">");
    }
    expect("(");
    std::string text;
    if (at(Token::Kind::Int) || at(Token::Kind::String))
      text = advance().text;
    else
      fail("expected a literal value");
    expect(")");
    auto [uw, sw] = literalWidths(text);
    if (kind == Expr::Kind::UIntLit && parseLiteralValue(text).negative)
      fail("negative UInt literal");
    e->minWidth = kind == Expr::Kind::UIntLit ? uw : sw;
    return e;
  }

  ExprPtr expr() {
    if ((atWord("UInt") || atWord("SInt")) && (atPunct("<", 1) || atPunct("(", 1)))
      return literal(atWord("UInt") ? Expr::Kind::UIntLit : Expr::Kind::SIntLit);
    if (at(Token::Kind::Ident) && atPunct("(", 1)) {
      auto e = std::make_shared<Expr>();
      e->loc = peek().loc;
      std::string op = advance().text;
      if (op == "read" || op == "probe" || op == "rwprobe")
        unsupported("probe expression '" + op + "'");
      e->kind = op == "mux"       ? Expr::Kind::Mux
                : op == "validif" ? Expr::Kind::ValidIf
                                  : Expr::Kind::PrimOp;
      e->name = op;
      expect("(");
      while (!atPunct(")")) {
        if (at(Token::Kind::Int))
          e->ints.push_back(integer());
        else if (!e->ints.empty())
          fail("expression argument after integer parameters");
        else
          e->args.push_back(expr());
        if (!atPunct(")"))
          expect(",");
      }
      advance();
      return e;
    }
    if (at(Token::Kind::Ident))
      return reference();
    fail("expected an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

std::pair<Int, Int> literalWidths(std::string_view text) {
  LiteralValue v = parseLiteralValue(text);
  Int bits = static_cast<Int>(v.bits.size());
  Int uintWidth = std::max<Int>(1, bits);
  Int sintWidth;
  if (bits == 0) {
    sintWidth = 1;
  } else if (!v.negative) {
    sintWidth = bits + 1;
  } else {
    // -m needs bitlength(m - 1) + 1 bits.
    bool powerOfTwo =
        std::count(v.bits.begin(), v.bits.end(), true) == 1;
    sintWidth = (powerOfTwo ? bits - 1 : bits) + 1;
  }
  return {uintWidth, sintWidth};
}

Circuit parse(std::string_view source) { return Parser(lex(source)).circuit(); }

} // namespace firwine::fir
