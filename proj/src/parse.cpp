#include "ord/parse.hpp"

#include <cctype>
#include <string>

#include "ord/errors.hpp"

namespace ord {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  Ordinal parse() {
    skip_ws();
    if (eof()) return Ordinal{};  // empty sum
    Ordinal value = expr();
    skip_ws();
    if (!eof()) fail("end of input");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  const Limits& limits_;

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("syntax error at position " + std::to_string(pos_) +
                         ": expected " + expected,
                     pos_, expected);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("'") + c + "'");
  }

  Nat numeral() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("numeral");
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += text_[pos_++];
    }
    return Nat(digits);
  }

  bool keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    // 'tower' must not swallow a leading prefix of an identifier-like token.
    std::size_t after = pos_ + word.size();
    if (after < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  Ordinal expr() {
    Ordinal acc = term();
    while (consume('+')) acc = add(acc, term());
    return acc;
  }

  Ordinal term() {
    skip_ws();
    if (keyword("tower")) return tower();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      return Ordinal::from_nat(numeral());
    }
    if (peek() != 'w') fail("'w', numeral or 'tower'");
    ++pos_;
    Ordinal base = Ordinal::omega();
    bool towered = false;
    if (consume('_')) {
      base = omega_tower(numeral(), Ordinal::from_nat(1), limits_);
      towered = true;
    }
    skip_ws();
    if (peek() == '^') {
      if (towered) fail("'*' or '+' ('w_d' takes no exponent)");
      ++pos_;
      base = Ordinal::power(atom());
    }
    Nat coeff = 1;
    if (consume('*')) coeff = numeral();
    return multiply(base, Ordinal::from_nat(coeff));
  }

  Ordinal tower() {
    expect('(');
    Nat height = numeral();
    expect(',');
    Ordinal inner = expr();
    expect(')');
    return omega_tower(height, inner, limits_);
  }

  Ordinal atom() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      return Ordinal::from_nat(numeral());
    }
    if (keyword("tower")) return tower();
    if (peek() == 'w') {
      ++pos_;
      if (consume('_')) return omega_tower(numeral(), Ordinal::from_nat(1), limits_);
      return Ordinal::omega();
    }
    if (consume('(')) {
      Ordinal inner = expr();
      expect(')');
      return inner;
    }
    fail("numeral, 'w' or '('");
  }
};

}  // namespace

Ordinal parse_ordinal(std::string_view text, const Limits& limits) {
  return Parser(text, limits).parse();
}

}  // namespace ord
