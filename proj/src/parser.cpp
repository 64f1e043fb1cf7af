#include "gerst/parser.hpp"

#include <cctype>

namespace gerst {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  Integer read_nat() {
    skip_ws();
    std::size_t start = i;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (digits.empty()) throw ParseError("expected number", start);
    return Integer(digits);
  }

  Rational read_rational() {
    Integer num = read_nat();
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      Integer den = read_nat();
      if (den == 0) throw ParseError("zero denominator", i);
      return Rational(num, den);
    }
    return Rational(num);
  }

  int read_exponent() {
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      Integer n = read_nat();
      if (n > 64) throw ParseError("exponent too large", i);
      return static_cast<int>(n);
    }
    return 1;
  }
};

}  // namespace

AlgebraElement parse_polynomial(const std::string& s, const RewriteEngine& eng) {
  Scanner sc{s};
  AlgebraElement out;
  bool first = true;
  while (!sc.done()) {
    Rational sign(1);
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? Rational(-1) : Rational(1);
      ++sc.i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", sc.i);
    }
    // term
    Rational coeff(1);
    Word word;
    bool any = false;
    while (!sc.done()) {
      char t = sc.peek();
      if (t == '+' || t == '-') break;
      if (t == 'x' || t == 'y') {
        ++sc.i;
        int e = sc.read_exponent();
        word.insert(word.end(), e, t == 'x' ? Letter::x : Letter::y);
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(t))) {
        coeff *= sc.read_rational();
        any = true;
      } else {
        throw ParseError(std::string("unexpected character '") + t + "'", sc.i);
      }
    }
    if (!any) throw ParseError("empty term", sc.i);
    out.add(normalize_word(word, eng), sign * coeff);
    first = false;
  }
  if (first) throw ParseError("empty expression", 0);
  return out;
}

namespace {

void append_power(std::string& s, char var, int e) {
  if (e == 0) return;
  if (!s.empty()) s += ' ';
  s += var;
  if (e > 1) s += "^" + std::to_string(e);
}

template <class Key, class PowerWriter>
std::string format_terms(const LinComb<Key>& e, PowerWriter&& write_powers) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string body;
    write_powers(body, m);
    if (body.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + " ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string format_polynomial(const AlgebraElement& e) {
  return format_terms(e, [](std::string& s, const Monomial& m) {
    append_power(s, 'x', m.xe);
    append_power(s, 'y', m.ye);
  });
}

std::string format_polynomial_op(const OpElement& e) {
  return format_terms(e, [](std::string& s, const OpMonomial& m) {
    append_power(s, 'y', m.ye);
    append_power(s, 'x', m.xe);
  });
}

}  // namespace gerst
