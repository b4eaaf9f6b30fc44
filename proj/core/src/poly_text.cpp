#include <cctype>
#include <stdexcept>

#include "ribbonforge/laurent.hpp"

namespace ribbonforge {

namespace {

// Recursive-descent parser for the canonical text form:
//   poly   := ['-'] term ((' + '|' - ') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | var ['^' exponent]
//   exponent := int | '(' int '/2' ')'
struct Parser {
  const VarTable& table;
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
      neg = src[pos] == '-';
      ++pos;
    }
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) fail("expected integer");
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string parse_name() {
    skip_ws();
    std::string name;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
      name.push_back(src[pos]);
      ++pos;
    }
    if (name.empty()) fail("expected variable name");
    return name;
  }

  // Exponent in half-units.
  std::int32_t parse_exponent() {
    skip_ws();
    if (eat('(')) {
      long num = parse_int();
      if (!eat('/')) fail("expected '/' in fractional exponent");
      long den = parse_int();
      if (den != 2) fail("only halves are supported in exponents");
      if (!eat(')')) fail("expected ')'");
      return static_cast<std::int32_t>(num);
    }
    return static_cast<std::int32_t>(2 * parse_int());
  }

  // One product of factors, sign applied by the caller.
  LaurentPoly parse_term() {
    Rational coeff(1);
    ExpVec exps(table.size(), 0);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        long num = parse_int();
        std::size_t save = pos;
        if (eat('/')) {
          skip_ws();
          if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            long den = parse_int();
            coeff *= Rational(num, den);
          } else {
            pos = save;
            coeff *= Rational(num);
          }
        } else {
          coeff *= Rational(num);
        }
        coeff.canonicalize();
        saw_factor = true;
      } else {
        std::string name = parse_name();
        int idx = table.index_of(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        std::int32_t half = 2;
        if (eat('^')) half = parse_exponent();
        exps[idx] += half;
        saw_factor = true;
      }
      if (!eat('*')) break;
    }
    if (!saw_factor) fail("empty term");
    return LaurentPoly::monomial(table, coeff, exps);
  }

  LaurentPoly parse_poly() {
    LaurentPoly acc(table);
    skip_ws();
    bool neg = eat('-');
    while (true) {
      LaurentPoly t = parse_term();
      if (neg) t = -t;
      acc += t;
      skip_ws();
      if (eat('+')) {
        neg = false;
      } else if (eat('-')) {
        neg = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return acc;
  }
};

}  // namespace

LaurentPoly parse_poly(const VarTable& table, const std::string& text) {
  std::string trimmed = text;
  // "0" is the canonical zero.
  std::size_t a = trimmed.find_first_not_of(" \t\n");
  std::size_t b = trimmed.find_last_not_of(" \t\n");
  if (a != std::string::npos && trimmed.substr(a, b - a + 1) == "0") return LaurentPoly::zero(table);
  Parser p{table, text};
  return p.parse_poly();
}

}  // namespace ribbonforge
