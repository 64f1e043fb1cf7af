#ifndef GERST_RATIONAL_HPP
#define GERST_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gerst {

// Exact scalar type. cpp_rational keeps values reduced with a positive
// denominator, which makes structural equality of elements canonical.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input
// or a zero denominator.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("bad rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    bad();
  }
  return Rational();  // unreachable
}

}  // namespace gerst

#endif
