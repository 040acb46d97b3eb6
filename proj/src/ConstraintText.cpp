//===- ConstraintText.cpp - Textual constraint files ---------------------===//

#include "firwine/ConstraintText.h"

#include <cctype>
#include <charconv>

namespace firwine {

namespace {

class LineParser {
public:
  LineParser(FirwineSystem &sys, std::string_view line, std::size_t lineNo)
      : sys_(sys), s_(line), lineNo_(lineNo) {}

  void parse() {
    VarId lhs = sys_.variable(ident());
    expect(">=");
    std::vector<LinearTerm> alts;
    if (peekWord("min")) {
      pos_ += 3;
      expect("(");
      alts.push_back(sum());
      while (accept(","))
        alts.push_back(sum());
      expect(")");
    } else {
      alts.push_back(sum());
    }
    skipSpace();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    sys_.add(lhs, std::move(alts));
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error(ErrorKind::Syntax, std::to_string(lineNo_) + ":" +
                                       std::to_string(pos_ + 1) + ": " + msg);
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skipSpace();
    if (s_.substr(pos_, tok.size()) != tok)
      return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok))
      fail("expected '" + std::string(tok) + "'");
  }

  static bool identStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool identChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '$' || c == '[' || c == ']';
  }

  bool peekWord(std::string_view w) {
    skipSpace();
    if (s_.substr(pos_, w.size()) != w)
      return false;
    std::size_t end = pos_ + w.size();
    while (end < s_.size() && s_[end] == ' ')
      ++end;
    return end < s_.size() && s_[end] == '(';
  }

  std::string_view ident() {
    skipSpace();
    if (pos_ >= s_.size() || !identStart(s_[pos_]))
      fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() && identChar(s_[pos_]))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  bool atInt() {
    skipSpace();
    std::size_t p = pos_;
    if (p < s_.size() && s_[p] == '-')
      ++p;
    return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
  }

  Int integer() {
    skipSpace();
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range)
      fail("integer out of range");
    if (ec != std::errc())
      fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  // IDENT | 2^IDENT, scaled by coeff.
  void scaled(LinearTerm &t, Int coeff) {
    if (coeff <= 0)
      fail("variable coefficients must be positive");
    if (accept("2^")) {
      t.addExponential(sys_.variable(ident()), coeff);
      return;
    }
    t.addVariable(sys_.variable(ident()), coeff);
  }

  void atom(LinearTerm &t) {
    skipSpace();
    if (s_.substr(pos_, 2) == "2^") {
      scaled(t, 1);
      return;
    }
    if (atInt()) {
      Int c = integer();
      if (accept("*"))
        scaled(t, c);
      else
        t.addConstant(c);
      return;
    }
    scaled(t, 1);
  }

  LinearTerm sum() {
    LinearTerm t;
    atom(t);
    for (;;) {
      if (accept("+")) {
        atom(t);
      } else if (accept("-")) {
        skipSpace();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("only integer constants may be subtracted");
        t.addConstant(checkedSub(0, integer()));
      } else {
        return t;
      }
    }
  }

  FirwineSystem &sys_;
  std::string_view s_;
  std::size_t lineNo_;
  std::size_t pos_ = 0;
};

} // namespace

FirwineSystem parseConstraints(std::string_view text) {
  FirwineSystem sys;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos)
      continue;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    LineParser(sys, line, lineNo).parse();
  }
  return sys;
}

std::string printConstraints(const FirwineSystem &sys) {
  std::string out;
  sys.forEachInequality([&](const MinInequality &m) {
    out += formatInequality(sys, m);
    out += '\n';
  });
  return out;
}

} // namespace firwine
