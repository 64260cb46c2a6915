#include "solsol/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace solsol {
namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
};

[[noreturn]] void fail(const std::string& text, const std::string& why) {
  throw ExprError("malformed coefficient expression '" + text + "': " + why);
}

// integer [ '/' integer ] | decimal (strtod handles the decimal/exponent case)
double parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  bool is_plain_int = true;
  if (c.peek() == '+' || c.peek() == '-') ++c.pos;
  while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) ||
                       c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E' ||
                       ((c.peek() == '+' || c.peek() == '-') &&
                        (c.s[c.pos - 1] == 'e' || c.s[c.pos - 1] == 'E')))) {
    if (c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E') is_plain_int = false;
    ++c.pos;
  }
  if (c.pos == start) fail(c.s, "expected a number");
  std::string num = c.s.substr(start, c.pos - start);
  char* end = nullptr;
  double v = std::strtod(num.c_str(), &end);
  if (end == nullptr || *end != '\0' || !std::isfinite(v)) fail(c.s, "bad number '" + num + "'");
  if (is_plain_int && c.eat('/')) {
    size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) fail(c.s, "expected denominator");
    double den = std::strtod(c.s.substr(dstart, c.pos - dstart).c_str(), nullptr);
    if (den == 0.0) fail(c.s, "zero denominator");
    v /= den;
  }
  return v;
}

double parse_root(Cursor& c) {
  // caller consumed "sqrt"
  c.skip_ws();
  if (!c.eat('(')) fail(c.s, "expected '(' after sqrt");
  double rad = parse_number(c);
  c.skip_ws();
  if (!c.eat(')')) fail(c.s, "expected ')'");
  if (rad < 0.0) fail(c.s, "negative radicand");
  return std::sqrt(rad);
}

bool starts_with_sqrt(const Cursor& c) { return c.s.compare(c.pos, 4, "sqrt") == 0; }

}  // namespace

CoeffExpr CoeffExpr::parse(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  double sign = 1.0;
  if (c.eat('-')) sign = -1.0;
  c.skip_ws();

  double v;
  if (starts_with_sqrt(c)) {
    c.pos += 4;
    v = parse_root(c);
  } else {
    v = parse_number(c);
    c.skip_ws();
    if (c.eat('*')) {
      c.skip_ws();
      if (!starts_with_sqrt(c)) fail(text, "expected sqrt(...) after '*'");
      c.pos += 4;
      v *= parse_root(c);
    }
  }
  c.skip_ws();
  if (!c.done()) fail(text, "trailing characters");
  if (!std::isfinite(v)) fail(text, "non-finite value");

  CoeffExpr e;
  e.text_ = text;
  e.value_ = sign * v;
  return e;
}

CoeffExpr CoeffExpr::from_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  CoeffExpr e;
  e.text_ = buf;
  e.value_ = v;
  return e;
}

}  // namespace solsol
