#ifndef GERST_BRACKET_HPP
#define GERST_BRACKET_HPP

#include "gerst/cohomology.hpp"
#include "gerst/ttp.hpp"

namespace gerst {

// Chain maps between the flipped and forward total complexes lifting the
// identity of R, solved degree by degree with a homogeneous ansatz.
struct ChainLift {
  std::map<QPGen, BimodElement> forward;  // tau_n : Q (x) P  ->  P (x) Q
  std::map<FGen, FlipElement> backward;   // the lift in the other direction
  bool unique = true;
};

ChainLift solve_chain_lift(const TtpComplex& ttp);

BimodElement apply_forward_lift(const TtpComplex& ttp, const ChainLift& lift,
                                const FlipElement& el);
FlipElement apply_backward_lift(const TtpComplex& ttp, const ChainLift& lift,
                                const BimodElement& el);

// d tau = tau d-hat, its mirror image, and that the two lifts are mutually
// inverse, on all basis inputs of internal degree <= N.
Report verify_chain_lift(const TtpComplex& ttp, const ChainLift& lift, int N);

AlgebraElement partial_x(const AlgebraElement& e);
AlgebraElement partial_y(const AlgebraElement& e);

// Schouten-Nijenhuis bracket of P dx + Q dy against R dx^dy on k[x,y];
// commutative twist only.
AlgebraElement schouten_oracle(const RewriteEngine& eng, const AlgebraElement& P,
                               const AlgebraElement& Q, const AlgebraElement& R);

// Orientation of the 2-cochain <-> bivector dictionary, calibrated once
// against the Schouten bracket on the commutative plane.
inline constexpr int kSchoutenOrientation = 1;

class BracketEngine {
 public:
  BracketEngine(const TtpComplex& ttp, const DiagonalMap& diag, const HomComplex& hom,
                const ChainLift& lift);

  // sigma : K (x)_R K -> (P (x)_A P) (x)_tau (Q (x)_B Q)
  QuadElement sigma(const Chain2& el) const;
  // phi = (phi_P (x) mu_Q (x) 1 + 1 (x) mu_P (x) phi_Q) sigma, degree +1
  BimodElement phi(const Chain2& el) const;
  // psi_f = phi (1 (x) f (x) 1) delta^(2), evaluated on one generator
  BimodElement psi(const Cochain& f, FGen target) const;

  // [f,g] = f psi_g - (-1)^{(m-1)(n-1)} g psi_f; `bracket` additionally
  // projects mod coboundaries. Two 2-cocycles give the vacuous zero cochain
  // in degree 3 (the complex stops at 2).
  Cochain bracket_raw(const Cochain& f, const Cochain& g) const;
  Cochain bracket(const Cochain& f, const Cochain& g) const;

  AlgebraElement apply_derivation(const Cochain& f, const AlgebraElement& v) const;
  Cochain derivation_commutator_oracle(const Cochain& f, const Cochain& g) const;

  Report verify_sigma_condition(int N) const;
  Report verify_homotopy_equation(int N) const;
  Report verify_lie(int N) const;

  const TtpComplex& ttp() const { return ttp_; }
  const HomComplex& hom() const { return hom_; }

 private:
  const TtpComplex& ttp_;
  const DiagonalMap& diag_;
  const HomComplex& hom_;
  const ChainLift& lift_;

  BimodElement quad_collapse_left(const QuadElement& el) const;   // mu_P (x) 1 (x) mu_Q (x) 1
  BimodElement quad_collapse_right(const QuadElement& el) const;  // 1 (x) mu_P (x) 1 (x) mu_Q
};

}  // namespace gerst

#endif
