#ifndef GERST_ALGEBRA_HPP
#define GERST_ALGEBRA_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "gerst/lincomb.hpp"
#include "gerst/rational.hpp"

namespace gerst {

// Normal-form monomial x^xe * y^ye of R = k<x,y>/(yx - q xy - a x^2).
struct Monomial {
  int xe = 0;
  int ye = 0;
  int degree() const { return xe + ye; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Opposite-order monomial y^ye * x^xe (basis of B (x) A).
struct OpMonomial {
  int ye = 0;
  int xe = 0;
  int degree() const { return xe + ye; }
  friend auto operator<=>(const OpMonomial&, const OpMonomial&) = default;
};

using AlgebraElement = LinComb<Monomial>;  // also serves as A (x) B in tensor form
using OpElement = LinComb<OpMonomial>;     // B (x) A in tensor form

AlgebraElement one();
AlgebraElement mono(int xe, int ye, Rational c = Rational(1));
OpElement op_mono(int ye, int xe, Rational c = Rational(1));

// -1 for zero, else max total degree of the support.
int degree(const AlgebraElement& e);
bool is_homogeneous(const AlgebraElement& e);
AlgebraElement homogeneous_part(const AlgebraElement& e, int d);
// x^dx * e * y^dy; needs no rewriting in the normal-form basis.
AlgebraElement shifted(const AlgebraElement& e, int dx, int dy);

// The rewrite rule  yx -> q*xy + alpha*x^2.  q = 0 would make the rule
// non-invertible and is rejected.
struct TwistSpec {
  Rational q;
  Rational alpha;
  TwistSpec(Rational q_, Rational alpha_);
  bool strongly_graded() const { return alpha == 0; }
  friend bool operator==(const TwistSpec&, const TwistSpec&) = default;
};

inline bool is_strongly_graded(const TwistSpec& t) { return t.strongly_graded(); }

enum class Letter : char { x = 'x', y = 'y' };
using Word = std::vector<Letter>;

// Rewriting caches for one twist. Not thread-safe per instance; independent
// instances may run concurrently.
class RewriteEngine {
 public:
  explicit RewriteEngine(TwistSpec twist);

  const TwistSpec& twist() const { return twist_; }

  // Normal form of y^j x^i in the x-before-y basis (the twisting map tau on
  // basis tensors, read as an element of A (x) B).
  const AlgebraElement& cross_ba(int j, int i) const;
  // Normal form of x^i y^j in the y-before-x basis (tau^{-1} likewise).
  const OpElement& cross_ab(int i, int j) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) const;
  OpElement multiply_op(const OpElement& a, const OpElement& b) const;

  AlgebraElement tau(const OpElement& t) const;
  OpElement tau_inv(const AlgebraElement& t) const;

  // Conversions between the two presentations of the same ring element.
  AlgebraElement to_forward(const OpMonomial& m) const { return cross_ba(m.ye, m.xe); }
  AlgebraElement to_forward(const OpElement& e) const;
  OpElement to_op(const AlgebraElement& e) const;

  AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const;

 private:
  TwistSpec twist_;
  mutable std::map<std::pair<int, int>, AlgebraElement> ba_cache_;
  mutable std::map<int, OpElement> ab_single_;  // x * y^j in op basis
  mutable std::map<std::pair<int, int>, OpElement> ab_cache_;
  const OpElement& x_past_y(int j) const;
  OpElement prepend_x(const OpElement& e) const;
};

AlgebraElement normalize_word(const Word& w, const RewriteEngine& eng);

// A single quadratic rewrite rule  yx -> c_xy*xy + c_xx*x^2 + c_yy*y^2.
// Used by the axiom checker's test hooks and the rewriting oracles; the
// production twists are the c_yy = 0 members.
struct QuadraticRule {
  Rational c_xy, c_xx, c_yy;
  static QuadraticRule from_twist(const TwistSpec& t) { return {t.q, t.alpha, Rational(0)}; }
};

// Exhaustive leftmost-redex rewriting; total for any rule of this shape.
AlgebraElement normalize_word(const Word& w, const QuadraticRule& rule);

struct CheckLine {
  std::string label;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(std::string label, bool pass, std::string detail = "") {
    lines.push_back({std::move(label), pass, std::move(detail)});
  }
};

// A twisting-map candidate given by its values on basis tensors y^j (x) x^i.
using TauFn = std::function<AlgebraElement(int j, int i)>;

// Checks the unit conditions and the hexagon
//   tau (m_B (x) m_A) = (m_A (x) m_B)(1 (x) tau (x) 1)(tau (x) tau)(1 (x) tau (x) 1)
// on all basis tensors of B (x) B (x) A (x) A of total degree <= N.
Report check_twist_axioms(const TauFn& tau, int N);
Report check_twist_axioms(const RewriteEngine& eng, int N);

}  // namespace gerst

#endif
