#ifndef GERST_KOSZUL_HPP
#define GERST_KOSZUL_HPP

#include <compare>
#include <utility>

#include "gerst/algebra.hpp"

namespace gerst {

// One side of the two-term Koszul resolution 0 -> A(x)A -> A(x)A -> A -> 0
// of a polynomial line k[x] (or k[y]; the formulas are mirror images, so one
// type serves both). Terms are sum of c * x^a e_p x^b with p in {0,1}; the
// resolution is zero above degree 1, structurally.
struct KoszulElement {
  int hom_degree = 0;
  LinComb<std::pair<int, int>> terms;  // (left exponent, right exponent)
  bool is_zero() const { return terms.is_zero(); }
  friend bool operator==(const KoszulElement&, const KoszulElement&) = default;
};

using PElement = KoszulElement;
using QElement = KoszulElement;

KoszulElement koszul_generator(int hom_degree);

// d~(x^a e1 x^b) = x^{a+1} e0 x^b - x^a e0 x^{b+1}; zero on degree 0.
KoszulElement koszul_differential(const KoszulElement& el);
inline KoszulElement p_differential(const PElement& el) { return koszul_differential(el); }
inline KoszulElement q_differential(const QElement& el) { return koszul_differential(el); }

// x^a e0 x^b -> x^{a+b}. Degree-1 input is rejected; inside homotopy
// formulas the augmentation is extended by zero instead.
LinComb<int> koszul_augment(const KoszulElement& el);
AlgebraElement augment_P(const PElement& el);  // value in k[x] c R
AlgebraElement augment_Q(const QElement& el);  // value in k[y] c R

// phi on e0 (x)_A x^t e0 with outer coefficients x^t1, x^t2:
// sum_{i=0}^{t-1} x^{t1+i} e1 x^{t-i-1+t2}.
KoszulElement koszul_homotopy(int t1, int t, int t2);
inline PElement koszul_homotopy_P(int t1, int t, int t2) { return koszul_homotopy(t1, t, t2); }
inline QElement koszul_homotopy_Q(int t1, int t, int t2) { return koszul_homotopy(t1, t, t2); }

// ---- lifted twisting maps on resolution terms ----------------------------

struct PBKey { int a, b, w; friend auto operator<=>(const PBKey&, const PBKey&) = default; };  // x^a e1 x^b (x) y^w
struct BPKey { int w, a, b; friend auto operator<=>(const BPKey&, const BPKey&) = default; };  // y^w (x) x^a e1 x^b
struct AQKey { int u, c, d; friend auto operator<=>(const AQKey&, const AQKey&) = default; };  // x^u (x) y^c e'1 y^d
struct QAKey { int c, d, u; friend auto operator<=>(const QAKey&, const QAKey&) = default; };  // y^c e'1 y^d (x) x^u

// Single-crossing values of the lifted twists, solved from the chain-map
// equations with a homogeneous ansatz (free variables zeroed, so the choice
// is deterministic when the lift is not unique).
struct TwistTable {
  LinComb<PBKey> tauB1;     // tau_{B,1}(y (x) e1)
  LinComb<BPKey> invTauB1;  // tau^{-1}_{B,1}(e1 (x) y)
  LinComb<AQKey> tau1A;     // tau_{1,A}(e'1 (x) x)
  LinComb<QAKey> invTau1A;  // tau^{-1}_{1,A}(x (x) e'1)
  bool unique_B = true;     // solution space was zero-dimensional
  bool unique_A = true;
};

TwistTable lift_twist(const RewriteEngine& eng);

// Full crossings of y^j / x^i through coefficiented resolution terms,
// iterating the single-step table through the compatibility diagram.
using PB = LinComb<PBKey>;  // also used with p = 0 via the `p` argument
using BP = LinComb<BPKey>;
using AQ = LinComb<AQKey>;
using QA = LinComb<QAKey>;

PB cross_tauB(const RewriteEngine& eng, const TwistTable& t, int p, int j, int a, int b);
BP cross_tauB_inv(const RewriteEngine& eng, const TwistTable& t, int p, int a, int b, int j);
AQ cross_tauA(const RewriteEngine& eng, const TwistTable& t, int q, int c, int d, int i);
QA cross_tauA_inv(const RewriteEngine& eng, const TwistTable& t, int q, int i, int c, int d);

// (a) chain-map property of the lifts, (b) the bimodule-compatibility
// diagram, (c) bijectivity in each internal degree <= N.
Report verify_compatibility(const RewriteEngine& eng, const TwistTable& t, int N);

}  // namespace gerst

#endif
