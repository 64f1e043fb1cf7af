#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerst/koszul.hpp"

using namespace gerst;

namespace {

const TwistSpec kJordan{Rational(1), Rational(1)};

KoszulElement elem(int deg, std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
  KoszulElement e;
  e.hom_degree = deg;
  for (const auto& [k, c] : terms) e.terms.add(k, Rational(c));
  return e;
}

}  // namespace

TEST_CASE("differential and augmentation") {
  CHECK(koszul_differential(koszul_generator(1)) == elem(0, {{{1, 0}, 1}, {{0, 1}, -1}}));
  CHECK(koszul_differential(koszul_generator(0)).is_zero());
  CHECK(koszul_differential(elem(1, {{{1, 1}, 1}})) == elem(0, {{{2, 1}, 1}, {{1, 2}, -1}}));

  CHECK(augment_P(koszul_generator(0)) == one());
  CHECK(augment_P(elem(0, {{{1, 2}, 1}})) == mono(3, 0));
  CHECK(augment_Q(elem(0, {{{1, 2}, 1}})) == mono(0, 3));
  CHECK(augment_P(koszul_differential(koszul_generator(1))).is_zero());
  CHECK_THROWS_AS(augment_P(koszul_generator(1)), std::invalid_argument);
}

TEST_CASE("contracting homotopy of the line") {
  CHECK(koszul_homotopy(0, 1, 0) == koszul_generator(1));
  CHECK(koszul_homotopy(0, 0, 0).is_zero());
  CHECK(koszul_homotopy(0, 3, 0) == elem(1, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));

  // homotopy identity on degree-0 inputs: d phi = mu (x) 1 - 1 (x) mu
  for (int t1 = 0; t1 <= 3; ++t1)
    for (int t = 0; t1 + t <= 8; ++t)
      for (int t2 = 0; t1 + t + t2 <= 8; ++t2) {
        KoszulElement lhs = koszul_differential(koszul_homotopy(t1, t, t2));
        KoszulElement rhs = elem(0, {});
        rhs.terms.add({t1 + t, t2}, Rational(1));
        rhs.terms.add({t1, t + t2}, Rational(-1));
        CHECK(lhs == rhs);
      }

  // degree-1 inputs: phi (d (x) 1 + 1 (x) d) = -(1 (x) mu) on e1 (x) x^t e0
  for (int t = 0; t <= 8; ++t) {
    KoszulElement lhs = elem(1, {});
    // (d e1) (x) x^t e0 = x e0 (x) x^t e0 - e0 x (x) x^t e0
    for (const auto& [k, c] : koszul_homotopy(1, t, 0).terms.terms()) lhs.terms.add(k, c);
    for (const auto& [k, c] : koszul_homotopy(0, t + 1, 0).terms.terms()) lhs.terms.add(k, -c);
    KoszulElement rhs = elem(1, {{{0, t}, -1}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lifted twists match the worked values") {
  RewriteEngine eng(kJordan);
  TwistTable t = lift_twist(eng);
  CHECK(t.unique_B);
  CHECK(t.unique_A);

  PB expectedB;
  expectedB.add({0, 0, 1}, Rational(1));  // e1 (x) y
  expectedB.add({1, 0, 0}, Rational(1));  // x e1 (x) 1
  expectedB.add({0, 1, 0}, Rational(1));  // e1 x (x) 1
  CHECK(t.tauB1 == expectedB);

  BP expectedBinv;
  expectedBinv.add({1, 0, 0}, Rational(1));
  expectedBinv.add({0, 1, 0}, Rational(-1));
  expectedBinv.add({0, 0, 1}, Rational(-1));
  CHECK(t.invTauB1 == expectedBinv);

  CHECK(t.tau1A == AQ({1, 0, 0}));
  CHECK(t.invTau1A == QA({0, 0, 1}));

  // general (q, alpha): tau_{B,1}(y (x) e1) = q e1 (x) y + alpha (x e1 + e1 x) (x) 1
  RewriteEngine eng2(TwistSpec{Rational(5, 3), Rational(-2)});
  TwistTable t2 = lift_twist(eng2);
  PB expected2;
  expected2.add({0, 0, 1}, Rational(5, 3));
  expected2.add({1, 0, 0}, Rational(-2));
  expected2.add({0, 1, 0}, Rational(-2));
  CHECK(t2.tauB1 == expected2);
  CHECK(t2.tau1A == Rational(5, 3) * AQ({1, 0, 0}));
}

TEST_CASE("multi-step crossings iterate the single-step rule") {
  RewriteEngine eng(kJordan);
  TwistTable t = lift_twist(eng);
  // e'1 (x) x^2  ->  x^2 (x) e'1 on the Jordan plane
  CHECK(cross_tauA(eng, t, 1, 0, 0, 2) == AQ({2, 0, 0}));
  // and with a nontrivial q the expected power accumulates
  RewriteEngine eng2(TwistSpec{Rational(2), Rational(0)});
  TwistTable t2 = lift_twist(eng2);
  CHECK(cross_tauA(eng2, t2, 1, 0, 0, 2) == Rational(4) * AQ({2, 0, 0}));
  // y^2 past e1 picks up the correction terms once per surviving y
  PB two_y = cross_tauB(eng, t, 1, 2, 0, 0);
  CHECK(two_y.coeff({0, 0, 2}) == 1);  // e1 (x) y^2 survives
  CHECK(two_y.coeff({1, 0, 1}) != 0);
}

TEST_CASE("quantum plane lift has no correction terms") {
  RewriteEngine eng(TwistSpec{Rational(2), Rational(0)});
  TwistTable t = lift_twist(eng);
  CHECK(t.tauB1 == Rational(2) * PB({0, 0, 1}));
  CHECK(t.invTauB1 == Rational(1, 2) * BP({1, 0, 0}));
  // strongly graded: every crossing preserves the bidegree
  for (int p = 0; p <= 1; ++p)
    for (int j = 0; j <= 4; ++j)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
          for (const auto& [k, c] : cross_tauB(eng, t, p, j, a, b).terms()) {
            CHECK(k.w == j);
            CHECK(k.a + k.b == a + b);
          }
}

TEST_CASE("compatibility verification") {
  for (const TwistSpec& tw :
       {kJordan, TwistSpec{Rational(3), Rational(0)}, TwistSpec{Rational(1), Rational(0)}}) {
    RewriteEngine eng(tw);
    Report rep = verify_compatibility(eng, lift_twist(eng), 8);
    CAPTURE(to_string(tw.q));
    for (const auto& l : rep.lines) {
      CAPTURE(l.label);
      CAPTURE(l.detail);
      CHECK(l.pass);
    }
  }
}

TEST_CASE("corrupted table fails the chain-map equation") {
  RewriteEngine eng(kJordan);
  TwistTable t = lift_twist(eng);
  t.tauB1 = PB({0, 0, 1}) + PB({0, 1, 0});  // drop the x e1 (x) 1 term
  Report rep = verify_compatibility(eng, t, 3);
  CHECK(!rep.ok());
  CHECK(!rep.lines[0].pass);  // the chain-map line
}

TEST_CASE("lifted crossings are internal-degree preserving") {
  RewriteEngine eng(kJordan);
  TwistTable t = lift_twist(eng);
  for (int p = 0; p <= 1; ++p)
    for (int j = 0; j <= 4; ++j)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
          for (const auto& [k, c] : cross_tauB(eng, t, p, j, a, b).terms())
            CHECK(k.a + k.b + k.w == j + a + b);
          for (const auto& [k, c] : cross_tauA(eng, t, p, a, b, j).terms())
            CHECK(k.u + k.c + k.d == j + a + b);
        }
}
