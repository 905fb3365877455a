#include <cctype>
#include <sstream>

#include "frobkit/parse.hpp"

namespace frobkit {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;  // 0-based cursor; errors report pos + 1

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos + 1); }
};

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring) { lex_.text = text; }

  Polynomial run() {
    lex_.skip_space();
    if (lex_.pos == lex_.text.size()) lex_.fail("empty polynomial");
    Polynomial f = expression();
    lex_.skip_space();
    if (lex_.pos != lex_.text.size()) {
      lex_.fail(std::string("unexpected character '") + lex_.text[lex_.pos] + "'");
    }
    return f;
  }

 private:
  Polynomial expression() {
    bool negate = false;
    while (true) {
      char c = lex_.peek();
      if (c == '-') {
        negate = !negate;
        ++lex_.pos;
      } else if (c == '+') {
        ++lex_.pos;
      } else {
        break;
      }
    }
    Polynomial sum = term();
    if (negate) sum = -sum;
    while (true) {
      char c = lex_.peek();
      if (c != '+' && c != '-') break;
      ++lex_.pos;
      Polynomial t = term();
      sum = c == '+' ? poly_add(sum, t) : poly_sub(sum, t);
    }
    return sum;
  }

  Polynomial term() {
    Polynomial prod = factor();
    while (lex_.peek() == '*') {
      ++lex_.pos;
      prod = poly_mul(prod, factor());
    }
    return prod;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.peek() != '^') return base;
    ++lex_.pos;
    lex_.skip_space();
    if (lex_.pos >= lex_.text.size() ||
        !std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      lex_.fail("exponent must be a non-negative integer literal");
    }
    std::int64_t exp = natural_checked();
    return poly_pow(base, exp);
  }

  Polynomial atom() {
    char c = lex_.peek();
    if (c == '(') {
      ++lex_.pos;
      Polynomial inner = expression();
      if (lex_.peek() != ')') lex_.fail("expected ')'");
      ++lex_.pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, static_cast<std::int64_t>(residue()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = lex_.pos;
      while (lex_.pos < lex_.text.size()) {
        char d = lex_.text[lex_.pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          ++lex_.pos;
        } else {
          break;
        }
      }
      std::string name(lex_.text.substr(start, lex_.pos - start));
      auto idx = ring_->variable_index(name);
      if (!idx) {
        throw ParseError("unknown variable '" + name + "'", start + 1);
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') lex_.fail("unexpected end of input");
    lex_.fail(std::string("unexpected character '") + c + "'");
  }

  // Integer literal reduced mod p digit by digit (literals may be huge).
  std::uint64_t residue() {
    const PrimeField& field = ring_->field();
    std::uint64_t value = 0;
    while (lex_.pos < lex_.text.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      value = field.add(field.mul(value, 10 % field.characteristic()),
                        field.reduce(lex_.text[lex_.pos] - '0'));
      ++lex_.pos;
    }
    return value;
  }

  // Exponent literal; must fit in int64.
  std::int64_t natural_checked() {
    std::int64_t value = 0;
    while (lex_.pos < lex_.text.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      value = checked_add(checked_mul(value, 10), lex_.text[lex_.pos] - '0');
      ++lex_.pos;
    }
    return value;
  }

  RingPtr ring_;
  Lexer lex_;
};

}  // namespace

Polynomial parse_poly(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).run();
}

std::string format_monomial(const RingContext& ring, const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    std::int64_t e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << ring.variable_name(i);
    if (e > 1) out << '^' << e;
  }
  if (first) out << '1';
  return out.str();
}

std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingContext& ring = *f.ring();
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) out << " + ";
    first = false;
    if (t.monomial.is_one()) {
      out << t.coefficient;
    } else {
      if (t.coefficient != 1) out << t.coefficient << '*';
      out << format_monomial(ring, t.monomial);
    }
  }
  return out.str();
}

}  // namespace frobkit
