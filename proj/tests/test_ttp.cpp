#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/session.hpp"

using namespace gerst;

namespace {

const TwistSpec kJordan{Rational(1), Rational(1)};
const TwistSpec kQuantum2{Rational(2), Rational(0)};
const TwistSpec kCommutative{Rational(1), Rational(0)};

BimodKey key(int lx, int ly, int p, int q, int rx, int ry) {
  return {Monomial{lx, ly}, FGen{p, q}, Monomial{rx, ry}};
}

BimodElement gen(int p, int q) { return BimodElement(key(0, 0, p, q, 0, 0)); }

}  // namespace

TEST_CASE("total differential reproduces the worked Jordan values") {
  Session s(kJordan);
  CHECK(s.ttp.differential_gen({0, 0}).is_zero());

  BimodElement d10 = BimodElement(key(1, 0, 0, 0, 0, 0)) - BimodElement(key(0, 0, 0, 0, 1, 0));
  CHECK(s.ttp.differential_gen({1, 0}) == d10);

  BimodElement d01 = BimodElement(key(0, 1, 0, 0, 0, 0)) - BimodElement(key(0, 0, 0, 0, 0, 1));
  CHECK(s.ttp.differential_gen({0, 1}) == d01);

  // (x(x)1 - 1(x)x)(e0(x)e1') + (x(x)1 + 1(x)x - y(x)1 + 1(x)y)(e1(x)e0')
  BimodElement d11 = BimodElement(key(1, 0, 0, 1, 0, 0)) - BimodElement(key(0, 0, 0, 1, 1, 0)) +
                     BimodElement(key(1, 0, 1, 0, 0, 0)) + BimodElement(key(0, 0, 1, 0, 1, 0)) -
                     BimodElement(key(0, 1, 1, 0, 0, 0)) + BimodElement(key(0, 0, 1, 0, 0, 1));
  CHECK(s.ttp.differential_gen({1, 1}) == d11);
}

TEST_CASE("quantum-plane d2 follows the general recipe and squares to zero") {
  Session s(kQuantum2);
  BimodElement expected = BimodElement(key(1, 0, 0, 1, 0, 0)) -
                          Rational(1, 2) * BimodElement(key(0, 0, 0, 1, 1, 0)) -
                          Rational(1, 2) * BimodElement(key(0, 1, 1, 0, 0, 0)) +
                          BimodElement(key(0, 0, 1, 0, 0, 1));
  CHECK(s.ttp.differential_gen({1, 1}) == expected);
  CHECK(s.ttp.total_differential(expected).is_zero());
}

TEST_CASE("flipped differentials reproduce the worked Jordan values") {
  Session s(kJordan);
  SUBCASE("d-hat 1 on e1'(x)e0") {
    FlipElement got = s.ttp.flipped_differential_gen({1, 0});
    FlipElement want = FlipElement({OpMonomial{1, 0}, QPGen{0, 0}, OpMonomial{}}) -
                       FlipElement({OpMonomial{}, QPGen{0, 0}, OpMonomial{1, 0}});
    CHECK(got == want);
  }
  SUBCASE("d-hat 1 on e0'(x)e1") {
    FlipElement got = s.ttp.flipped_differential_gen({0, 1});
    FlipElement want = FlipElement({OpMonomial{0, 1}, QPGen{0, 0}, OpMonomial{}}) -
                       FlipElement({OpMonomial{}, QPGen{0, 0}, OpMonomial{0, 1}});
    CHECK(got == want);
  }
  SUBCASE("d-hat 2") {
    // (1(x)x - x(x)1)(e1'(x)e0) + (y(x)1 - 1(x)y - x(x)1 - 1(x)x)(e0'(x)e1)
    FlipElement want = FlipElement({OpMonomial{}, QPGen{1, 0}, OpMonomial{0, 1}}) -
                       FlipElement({OpMonomial{0, 1}, QPGen{1, 0}, OpMonomial{}}) +
                       FlipElement({OpMonomial{1, 0}, QPGen{0, 1}, OpMonomial{}}) -
                       FlipElement({OpMonomial{}, QPGen{0, 1}, OpMonomial{1, 0}}) -
                       FlipElement({OpMonomial{0, 1}, QPGen{0, 1}, OpMonomial{}}) -
                       FlipElement({OpMonomial{}, QPGen{0, 1}, OpMonomial{0, 1}});
    CHECK(s.ttp.flipped_differential_gen({1, 1}) == want);
  }
}

TEST_CASE("d compose d vanishes") {
  for (const TwistSpec& tw : {kJordan, kQuantum2, kCommutative}) {
    Session s(tw);
    Report rep = s.ttp.verify_dd_zero();
    for (const auto& l : rep.lines) CHECK(l.pass);
  }
}

TEST_CASE("canonical coordinates respect the crossing bimodule action") {
  Session s(kJordan);
  // e1 (x) y e0'  =  y g - x g - g x  with g = e1 (x) e0'   (the d2 rewriting)
  Seq raw = {Tok::P1, Tok::Y, Tok::Q0};
  BimodElement expected = BimodElement(key(0, 1, 1, 0, 0, 0)) -
                          BimodElement(key(1, 0, 1, 0, 0, 0)) -
                          BimodElement(key(0, 0, 1, 0, 1, 0));
  CHECK(s.canon.canon_bimod(raw) == expected);

  // raw left/right multiplication through the token engine agrees with the
  // free outer action, for every generator and letter
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q)
      for (int lx = 0; lx <= 1; ++lx)
        for (int ly = 0; ly <= 1; ++ly)
          for (int rx = 0; rx <= 1; ++rx)
            for (int ry = 0; ry <= 1; ++ry) {
              BimodKey k = key(lx, ly, p, q, rx, ry);
              Seq raw_y = {Tok::Y};
              append_tokens(raw_y, tokens_of(k));
              CHECK(s.canon.canon_bimod(raw_y) ==
                    s.ttp.left_action(mono(0, 1), BimodElement(k)));
              Seq raw_x = {Tok::X};
              append_tokens(raw_x, tokens_of(k));
              CHECK(s.canon.canon_bimod(raw_x) ==
                    s.ttp.left_action(mono(1, 0), BimodElement(k)));
              Seq raw_ry = tokens_of(k);
              raw_ry.push_back(Tok::Y);
              CHECK(s.canon.canon_bimod(raw_ry) ==
                    s.ttp.right_action(BimodElement(k), mono(0, 1)));
              Seq raw_rx = tokens_of(k);
              raw_rx.push_back(Tok::X);
              CHECK(s.canon.canon_bimod(raw_rx) ==
                    s.ttp.right_action(BimodElement(k), mono(1, 0)));
            }
}

TEST_CASE("bimodule axioms in canonical coordinates") {
  Session s(kJordan);
  std::vector<AlgebraElement> ring;
  for (int d = 0; d <= 3; ++d)
    for (int i = 0; i <= d; ++i) ring.push_back(mono(i, d - i));
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) {
      BimodElement g = gen(p, q);
      CHECK(s.ttp.left_action(one(), g) == g);
      CHECK(s.ttp.right_action(g, one()) == g);
      for (const auto& r : ring)
        for (const auto& t : ring) {
          CHECK(s.ttp.right_action(s.ttp.left_action(r, g), t) ==
                s.ttp.left_action(r, s.ttp.right_action(g, t)));
          CHECK(s.ttp.left_action(s.rew.multiply(r, t), g) ==
                s.ttp.left_action(r, s.ttp.left_action(t, g)));
          CHECK(s.ttp.right_action(g, s.rew.multiply(r, t)) ==
                s.ttp.right_action(s.ttp.right_action(g, r), t));
        }
    }
}

TEST_CASE("differentials are internal-degree homogeneous") {
  Session s(kJordan);
  for (int h = 1; h <= 2; ++h)
    for (FGen g : s.ttp.gens(h))
      for (const auto& [k, c] : s.ttp.differential_gen(g).terms())
        CHECK(k.degree() == g.degree());
}

TEST_CASE("exactness of the truncated total complex") {
  SUBCASE("jordan") {
    Session s(kJordan);
    CHECK(s.ttp.verify_exactness(10).ok());
  }
  SUBCASE("commutative") {
    Session s(kCommutative);
    CHECK(s.ttp.verify_exactness(10).ok());
  }
  SUBCASE("quantum q=5") {
    Session s(TwistSpec{Rational(5), Rational(0)});
    CHECK(s.ttp.verify_exactness(8).ok());
  }
}

TEST_CASE("diagonal takes the worked values") {
  Session s(kJordan);
  auto c2 = [](int p1, int q1, int p2, int q2) {
    return Chain2(Chain2Key{Monomial{}, FGen{p1, q1}, Monomial{}, FGen{p2, q2}, Monomial{}});
  };
  CHECK(s.diag.unique());
  CHECK(s.diag.delta_gen({0, 0}) == c2(0, 0, 0, 0));
  CHECK(s.diag.delta_gen({1, 0}) == c2(0, 0, 1, 0) + c2(1, 0, 0, 0));
  CHECK(s.diag.delta_gen({0, 1}) == c2(0, 1, 0, 0) + c2(0, 0, 0, 1));
  // The self-pairing term in degree 2 is forced by the chain condition: it
  // is the x^2 part of the defining relation showing up in the diagonal,
  // so it is present exactly when alpha != 0.
  CHECK(s.diag.delta_gen({1, 1}) ==
        c2(0, 0, 1, 1) - c2(0, 1, 1, 0) + c2(1, 0, 0, 1) + c2(1, 1, 0, 0) + c2(1, 0, 1, 0));
}

TEST_CASE("split-and-cross composite matches the diagonal iff strongly graded") {
  for (const TwistSpec& tw : {kQuantum2, kCommutative, TwistSpec{Rational(3), Rational(0)}}) {
    Session s(tw);
    for (int h = 0; h <= 2; ++h)
      for (FGen g : s.ttp.gens(h)) CHECK(s.diag.delta_gen(g) == s.diag.composite_gen(g));
  }
  Session s(kJordan);
  Chain2 missing = s.diag.delta_gen({1, 1}) - s.diag.composite_gen({1, 1});
  CHECK(missing ==
        Chain2(Chain2Key{Monomial{}, FGen{1, 0}, Monomial{}, FGen{1, 0}, Monomial{}}));
}

TEST_CASE("coalgebra laws") {
  SUBCASE("jordan") {
    Session s(kJordan);
    Report rep = s.diag.verify_coalgebra(8);
    for (const auto& l : rep.lines) {
      CAPTURE(l.label);
      CHECK(l.pass);
    }
  }
  SUBCASE("quantum") {
    Session s(kQuantum2);
    CHECK(s.diag.verify_coalgebra(8).ok());
  }
}

TEST_CASE("counit on the bottom generator") {
  Session s(kJordan);
  BimodElement b = gen(0, 0);
  CHECK(s.ttp.collapse1(s.diag.delta(b)) == b);
  CHECK(s.ttp.collapse2(s.diag.delta(b)) == b);
  CHECK(s.ttp.augment(b) == one());
}
