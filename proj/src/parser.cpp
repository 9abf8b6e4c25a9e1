#include "autoarc/parser.hpp"

#include <algorithm>
#include <cctype>

namespace autoarc {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

class Parser {
 public:
  Parser(const std::string& text, const PolyRing& ring)
      : lex_{text}, ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    if (lex_.peek() != '\0')
      throw ParseError("unexpected character '" + std::string(1, lex_.peek()) +
                       "' at position " + std::to_string(lex_.pos));
    return p;
  }

 private:
  Polynomial expr() {
    bool neg = false;
    while (true) {
      if (lex_.eat('-'))
        neg = !neg;
      else if (lex_.eat('+'))
        ;
      else
        break;
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      if (lex_.eat('+')) {
        p = p + term();
      } else if (lex_.eat('-')) {
        p = p - term();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lex_.eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex_.eat('^')) {
      uint32_t e = natural();
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      Polynomial p = expr();
      if (!lex_.eat(')')) throw ParseError("missing closing parenthesis");
      return p;
    }
    if (c == '-') {
      lex_.take();
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (lex_.eat('/')) {
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator");
        return Polynomial::constant(ring_, Coeff(num, den));
      }
      return Polynomial::constant(ring_, Coeff(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("unknown identifier: " + name);
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') throw ParseError("unexpected end of input");
    throw ParseError("unexpected character '" + std::string(1, c) + "'");
  }

  mpz_class integer() {
    lex_.skip_ws();
    std::string digits;
    while (lex_.pos < lex_.s.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos])))
      digits += lex_.s[lex_.pos++];
    if (digits.empty()) throw ParseError("expected integer");
    return mpz_class(digits);
  }

  uint32_t natural() {
    mpz_class v = integer();
    if (v < 0 || v > kMaxTotalDegree)
      throw ResourceError("exponent out of range");
    return static_cast<uint32_t>(v.get_ui());
  }

  std::string identifier() {
    lex_.skip_ws();
    std::string name;
    while (lex_.pos < lex_.s.size()) {
      char ch = lex_.s[lex_.pos];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        name += ch;
        ++lex_.pos;
      } else {
        break;
      }
    }
    return name;
  }

  Lexer lex_;
  const PolyRing& ring_;
};

std::string coeff_string(const Coeff& c) {
  return c.get_str();  // "p" or "p/q", already in lowest terms
}

std::string monomial_string(const PolyRing& ring, const Monomial& m,
                            const std::map<std::string, std::string>& names) {
  std::string out;
  for (size_t i = 0; i < ring.nvars(); ++i) {
    uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    auto it = names.find(ring.var(i));
    out += it != names.end() ? it->second : ring.var(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
  return Parser(text, ring).run();
}

std::string render_polynomial(const Polynomial& f) {
  return render_polynomial(f, RenderOptions{});
}

std::string render_polynomial(const Polynomial& f, const RenderOptions& opts) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = f.terms();
  if (opts.term_greater) {
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term& a, const Term& b) {
                       return opts.term_greater(a.mon, b.mon);
                     });
  }
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string ms = monomial_string(f.ring(), t.mon, opts.names);
    if (ms.empty()) {
      out += coeff_string(c);
    } else if (c == 1) {
      out += ms;
    } else {
      out += coeff_string(c) + "*" + ms;
    }
  }
  return out;
}

}  // namespace autoarc
