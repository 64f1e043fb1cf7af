#include "gerst/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace gerst {

AlgebraElement one() { return AlgebraElement(Monomial{0, 0}); }

AlgebraElement mono(int xe, int ye, Rational c) {
  return AlgebraElement(Monomial{xe, ye}, std::move(c));
}

OpElement op_mono(int ye, int xe, Rational c) {
  return OpElement(OpMonomial{ye, xe}, std::move(c));
}

int degree(const AlgebraElement& e) {
  int d = -1;
  for (const auto& [m, c] : e.terms()) d = std::max(d, m.degree());
  return d;
}

bool is_homogeneous(const AlgebraElement& e) {
  int d = -1;
  for (const auto& [m, c] : e.terms()) {
    if (d == -1) d = m.degree();
    else if (m.degree() != d) return false;
  }
  return true;
}

AlgebraElement homogeneous_part(const AlgebraElement& e, int d) {
  AlgebraElement out;
  for (const auto& [m, c] : e.terms())
    if (m.degree() == d) out.add(m, c);
  return out;
}

AlgebraElement shifted(const AlgebraElement& e, int dx, int dy) {
  AlgebraElement out;
  for (const auto& [m, c] : e.terms()) out.add(Monomial{m.xe + dx, m.ye + dy}, c);
  return out;
}

TwistSpec::TwistSpec(Rational q_, Rational alpha_) : q(std::move(q_)), alpha(std::move(alpha_)) {
  if (q == 0) throw std::invalid_argument("TwistSpec: q must be nonzero");
}

RewriteEngine::RewriteEngine(TwistSpec twist) : twist_(std::move(twist)) {}

// y x^i = q^i x^i y + alpha [i]_q x^{i+1}, built one x at a time.
// cross_ba(j, i) peels the leftmost y:  y^j x^i = y^{j-1} (y x^i).
const AlgebraElement& RewriteEngine::cross_ba(int j, int i) const {
  auto key = std::make_pair(j, i);
  auto it = ba_cache_.find(key);
  if (it != ba_cache_.end()) return it->second;

  AlgebraElement r;
  if (j == 0) {
    r = mono(i, 0);
  } else if (i == 0) {
    r = mono(0, j);
  } else if (j == 1) {
    // y x^i = q x (y x^{i-1}) + alpha x^{i+1}
    r = shifted(cross_ba(1, i - 1), 1, 0);
    r *= twist_.q;
    r.add(Monomial{i + 1, 0}, twist_.alpha);
  } else {
    for (const auto& [m, c] : cross_ba(1, i).terms())
      r.add(shifted(cross_ba(j - 1, m.xe), 0, m.ye), c);
  }
  return ba_cache_.emplace(key, std::move(r)).first->second;
}

// x y^j in the op basis:  x y^j = q^{-1} y (x y^{j-1}) - q^{-1} alpha x (x y^{j-1}).
const OpElement& RewriteEngine::x_past_y(int j) const {
  auto it = ab_single_.find(j);
  if (it != ab_single_.end()) return it->second;
  OpElement r;
  if (j == 0) {
    r = op_mono(0, 1);
  } else {
    const OpElement& prev = x_past_y(j - 1);
    Rational qi = Rational(1) / twist_.q;
    for (const auto& [m, c] : prev.terms()) r.add(OpMonomial{m.ye + 1, m.xe}, qi * c);
    r.add(prepend_x(prev), -qi * twist_.alpha);
  }
  return ab_single_.emplace(j, std::move(r)).first->second;
}

OpElement RewriteEngine::prepend_x(const OpElement& e) const {
  OpElement out;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [m2, c2] : x_past_y(m.ye).terms())
      out.add(OpMonomial{m2.ye, m2.xe + m.xe}, c * c2);
  }
  return out;
}

const OpElement& RewriteEngine::cross_ab(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = ab_cache_.find(key);
  if (it != ab_cache_.end()) return it->second;
  OpElement r = op_mono(j, 0);
  for (int k = 0; k < i; ++k) r = prepend_x(r);
  return ab_cache_.emplace(key, std::move(r)).first->second;
}

AlgebraElement RewriteEngine::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add(shifted(cross_ba(ma.ye, mb.xe), ma.xe, mb.ye), ca * cb);
  return out;
}

AlgebraElement RewriteEngine::multiply(const AlgebraElement& a, const AlgebraElement& b,
                                       const AlgebraElement& c) const {
  return multiply(multiply(a, b), c);
}

OpElement RewriteEngine::multiply_op(const OpElement& a, const OpElement& b) const {
  OpElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      for (const auto& [m, c] : cross_ab(ma.xe, mb.ye).terms())
        out.add(OpMonomial{ma.ye + m.ye, m.xe + mb.xe}, ca * cb * c);
  return out;
}

AlgebraElement RewriteEngine::tau(const OpElement& t) const { return to_forward(t); }

OpElement RewriteEngine::tau_inv(const AlgebraElement& t) const { return to_op(t); }

AlgebraElement RewriteEngine::to_forward(const OpElement& e) const {
  AlgebraElement out;
  for (const auto& [m, c] : e.terms()) out.add(cross_ba(m.ye, m.xe), c);
  return out;
}

OpElement RewriteEngine::to_op(const AlgebraElement& e) const {
  OpElement out;
  for (const auto& [m, c] : e.terms()) out.add(cross_ab(m.xe, m.ye), c);
  return out;
}

AlgebraElement RewriteEngine::commutator(const AlgebraElement& a, const AlgebraElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement normalize_word(const Word& w, const RewriteEngine& eng) {
  AlgebraElement r = one();
  for (Letter l : w) {
    AlgebraElement gen = (l == Letter::x) ? mono(1, 0) : mono(0, 1);
    r = eng.multiply(r, gen);
  }
  return r;
}

namespace {

using RuleWord = std::string;  // letters 'x','y'

LinComb<RuleWord> rewrite_leftmost(const RuleWord& w, const QuadraticRule& rule) {
  LinComb<RuleWord> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 'y' && w[i + 1] == 'x') {
      auto splice = [&](const char* mid, const Rational& c) {
        if (c == 0) return;
        RuleWord nw = w.substr(0, i) + mid + w.substr(i + 2);
        out.add(std::move(nw), c);
      };
      splice("xy", rule.c_xy);
      splice("xx", rule.c_xx);
      splice("yy", rule.c_yy);
      return out;
    }
  }
  out.add(w, Rational(1));
  return out;
}

}  // namespace

AlgebraElement normalize_word(const Word& w, const QuadraticRule& rule) {
  RuleWord s;
  for (Letter l : w) s.push_back(static_cast<char>(l));
  LinComb<RuleWord> cur(std::move(s));
  for (;;) {
    LinComb<RuleWord> next;
    bool changed = false;
    for (const auto& [word, c] : cur.terms()) {
      auto r = rewrite_leftmost(word, rule);
      if (r.size() != 1 || r.terms().begin()->first != word) changed = true;
      next.add(r, c);
    }
    cur = std::move(next);
    if (!changed) break;
  }
  AlgebraElement out;
  for (const auto& [word, c] : cur.terms()) {
    int xs = static_cast<int>(std::count(word.begin(), word.end(), 'x'));
    out.add(Monomial{xs, static_cast<int>(word.size()) - xs}, c);
  }
  return out;
}

Report check_twist_axioms(const TauFn& tau, int N) {
  Report rep{"twist-axioms", {}};
  if (N < 2) throw std::invalid_argument("check_twist_axioms: N >= 2 required");

  bool units_ok = true;
  std::string unit_detail;
  for (int d = 0; d <= N && units_ok; ++d) {
    if (tau(0, d) != mono(d, 0)) {
      units_ok = false;
      unit_detail = "tau(1 (x) x^" + std::to_string(d) + ") != x^d (x) 1";
    }
    if (units_ok && tau(d, 0) != mono(0, d)) {
      units_ok = false;
      unit_detail = "tau(y^" + std::to_string(d) + " (x) 1) != 1 (x) y^d";
    }
  }
  rep.add("unit conditions", units_ok, unit_detail);

  bool hex_ok = true;
  std::string hex_detail;
  for (int j1 = 0; j1 <= N && hex_ok; ++j1)
    for (int j2 = 0; j1 + j2 <= N && hex_ok; ++j2)
      for (int i1 = 0; j1 + j2 + i1 <= N && hex_ok; ++i1)
        for (int i2 = 0; j1 + j2 + i1 + i2 <= N && hex_ok; ++i2) {
          AlgebraElement lhs = tau(j1 + j2, i1 + i2);
          // (m_A (x) m_B)(1 (x) tau (x) 1)(tau (x) tau)(1 (x) tau (x) 1)
          AlgebraElement rhs;
          for (const auto& [m1, c1] : tau(j2, i1).terms()) {          // inner crossing
            for (const auto& [m2, c2] : tau(j1, m1.xe).terms()) {     // left tau
              for (const auto& [m3, c3] : tau(m1.ye, i2).terms()) {   // right tau
                for (const auto& [m4, c4] : tau(m2.ye, m3.xe).terms())  // middle crossing
                  rhs.add(Monomial{m2.xe + m4.xe, m4.ye + m3.ye}, c1 * c2 * c3 * c4);
              }
            }
          }
          if (!(lhs == rhs)) {
            hex_ok = false;
            hex_detail = "hexagon fails at (j1,j2,i1,i2)=(" + std::to_string(j1) + "," +
                         std::to_string(j2) + "," + std::to_string(i1) + "," +
                         std::to_string(i2) + ")";
          }
        }
  rep.add("hexagon (degree <= " + std::to_string(N) + ")", hex_ok, hex_detail);
  return rep;
}

Report check_twist_axioms(const RewriteEngine& eng, int N) {
  return check_twist_axioms(
      [&eng](int j, int i) { return eng.cross_ba(j, i); }, N);
}

}  // namespace gerst
