#ifndef GERST_SESSION_HPP
#define GERST_SESSION_HPP

#include "gerst/bracket.hpp"
#include "gerst/cohomology.hpp"
#include "gerst/koszul.hpp"
#include "gerst/ttp.hpp"

namespace gerst {

// Everything derived from one twist, built in dependency order. Instances
// are independent; caches inside are not synchronized, so share one session
// per thread.
struct Session {
  TwistSpec twist;
  RewriteEngine rew;
  TwistTable table;
  Canonicalizer canon;
  TtpComplex ttp;
  ChainLift lift;
  DiagonalMap diag;
  HomComplex hom;
  BracketEngine bracket;

  explicit Session(TwistSpec t)
      : twist(t),
        rew(twist),
        table(lift_twist(rew)),
        canon(rew, table),
        ttp(canon),
        lift(solve_chain_lift(ttp)),
        diag(ttp, lift.backward),
        hom(ttp),
        bracket(ttp, diag, hom, lift) {}
};

}  // namespace gerst

#endif
