#ifndef GERST_PARSER_HPP
#define GERST_PARSER_HPP

#include <stdexcept>
#include <string>

#include "gerst/algebra.hpp"

namespace gerst {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:  expr := ['-'] term (('+'|'-') term)*
//           term := (rational | 'x' ['^' nat] | 'y' ['^' nat] | '*')+
// Letters are read in written order and normalized through the rewrite
// rule, so "y x" parses to x y + x^2 on the Jordan plane.
AlgebraElement parse_polynomial(const std::string& s, const RewriteEngine& eng);

// "3/2 x^2 y - y^3 + 1"; "0" for zero. Terms in descending x-power within
// ascending total degree blocks is not guaranteed; order follows the
// normal-form monomial order (x-power, then y-power).
std::string format_polynomial(const AlgebraElement& e);
std::string format_polynomial_op(const OpElement& e);  // y-before-x basis

}  // namespace gerst

#endif
