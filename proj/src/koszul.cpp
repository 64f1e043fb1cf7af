#include "gerst/koszul.hpp"

#include <stdexcept>

#include "gerst/linalg.hpp"

namespace gerst {

KoszulElement koszul_generator(int hom_degree) {
  if (hom_degree < 0 || hom_degree > 1)
    throw std::invalid_argument("koszul_generator: degree must be 0 or 1");
  KoszulElement el;
  el.hom_degree = hom_degree;
  el.terms.add({0, 0}, Rational(1));
  return el;
}

KoszulElement koszul_differential(const KoszulElement& el) {
  KoszulElement out;
  out.hom_degree = 0;
  if (el.hom_degree == 0) return out;  // zero on degree 0
  for (const auto& [k, c] : el.terms.terms()) {
    out.terms.add({k.first + 1, k.second}, c);
    out.terms.add({k.first, k.second + 1}, -c);
  }
  return out;
}

LinComb<int> koszul_augment(const KoszulElement& el) {
  if (el.hom_degree != 0)
    throw std::invalid_argument("augmentation undefined above degree 0");
  LinComb<int> out;
  for (const auto& [k, c] : el.terms.terms()) out.add(k.first + k.second, c);
  return out;
}

AlgebraElement augment_P(const PElement& el) {
  AlgebraElement out;
  for (const auto& [d, c] : koszul_augment(el).terms()) out.add(Monomial{d, 0}, c);
  return out;
}

AlgebraElement augment_Q(const QElement& el) {
  AlgebraElement out;
  for (const auto& [d, c] : koszul_augment(el).terms()) out.add(Monomial{0, d}, c);
  return out;
}

KoszulElement koszul_homotopy(int t1, int t, int t2) {
  KoszulElement out;
  out.hom_degree = 1;
  for (int i = 0; i < t; ++i) out.terms.add({t1 + i, t - i - 1 + t2}, Rational(1));
  return out;
}

// ---- crossing iterators ---------------------------------------------------

namespace {

// Shape guards: the solved single-crossing values for this algebra family
// keep one y (resp. x) intact or absorb it into coefficient corrections.
// The iterators below rely on that.
void check_forward_shape(const TwistTable& t) {
  for (const auto& [k, c] : t.tauB1.terms())
    if (k.w > 0 && !(k.w == 1 && k.a == 0 && k.b == 0))
      throw std::logic_error("lift_twist: unsupported tauB1 shape");
  if (t.tau1A.size() != 1 || t.tau1A.terms().begin()->first.c != 0 ||
      t.tau1A.terms().begin()->first.d != 0)
    throw std::logic_error("lift_twist: unsupported tau1A shape");
}

void check_table_shape(const TwistTable& t) {
  check_forward_shape(t);
  for (const auto& [k, c] : t.invTauB1.terms())
    if (k.w > 0 && !(k.w == 1 && k.a == 0 && k.b == 0))
      throw std::logic_error("lift_twist: unsupported invTauB1 shape");
  if (t.invTau1A.size() != 1 || t.invTau1A.terms().begin()->first.c != 0 ||
      t.invTau1A.terms().begin()->first.d != 0)
    throw std::logic_error("lift_twist: unsupported invTau1A shape");
}

Rational pow_rat(const Rational& r, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= r;
  return out;
}

// One y forward through x^a e_p x^b.
PB cross_one_y(const RewriteEngine& eng, const TwistTable& t, int p, int a, int b) {
  PB out;
  for (const auto& [m, c1] : eng.cross_ba(1, a).terms()) {
    if (m.ye == 0) {
      out.add({m.xe, b, 0}, c1);
    } else if (p == 0) {
      for (const auto& [m2, c2] : eng.cross_ba(1, b).terms())
        out.add({m.xe, m2.xe, m2.ye}, c1 * c2);
    } else {
      for (const auto& [k, c2] : t.tauB1.terms()) {
        if (k.w == 0) {
          out.add({m.xe + k.a, k.b + b, 0}, c1 * c2);
        } else {
          for (const auto& [m2, c3] : eng.cross_ba(1, b).terms())
            out.add({m.xe + k.a, k.b + m2.xe, m2.ye}, c1 * c2 * c3);
        }
      }
    }
  }
  return out;
}

// One y backward through x^a e_p x^b.
BP cross_one_y_inv(const RewriteEngine& eng, const TwistTable& t, int p, int a, int b) {
  BP out;
  for (const auto& [m, c1] : eng.cross_ab(b, 1).terms()) {
    if (m.ye == 0) {
      out.add({0, a, m.xe}, c1);
    } else if (p == 0) {
      for (const auto& [m2, c2] : eng.cross_ab(a, 1).terms())
        out.add({m2.ye, m2.xe, m.xe}, c1 * c2);
    } else {
      for (const auto& [k, c2] : t.invTauB1.terms()) {
        if (k.w == 0) {
          out.add({0, a + k.a, k.b + m.xe}, c1 * c2);
        } else {
          for (const auto& [m2, c3] : eng.cross_ab(a, 1).terms())
            out.add({m2.ye, m2.xe + k.a, k.b + m.xe}, c1 * c2 * c3);
        }
      }
    }
  }
  return out;
}

// One x leftward through y^c e'_q y^d.
AQ cross_one_x(const RewriteEngine& eng, const TwistTable& t, int q, int c, int d) {
  AQ out;
  for (const auto& [m, c1] : eng.cross_ba(d, 1).terms()) {
    int blk = m.xe;
    Rational gen_coeff(1);
    if (q == 1) {
      const auto& [k, g] = *t.tau1A.terms().begin();
      gen_coeff = pow_rat(g, blk);
      blk *= k.u;
    }
    for (const auto& [m2, c2] : eng.cross_ba(c, blk).terms())
      out.add({m2.xe, m2.ye, m.ye}, c1 * gen_coeff * c2);
  }
  return out;
}

// One x rightward through y^c e'_q y^d.
QA cross_one_x_inv(const RewriteEngine& eng, const TwistTable& t, int q, int c, int d) {
  QA out;
  for (const auto& [m, c1] : eng.cross_ab(1, c).terms()) {
    int blk = m.xe;
    Rational gen_coeff(1);
    if (q == 1) {
      const auto& [k, g] = *t.invTau1A.terms().begin();
      gen_coeff = pow_rat(g, blk);
      blk *= k.u;
    }
    for (const auto& [m2, c2] : eng.cross_ab(blk, d).terms())
      out.add({m.ye, m2.ye, m2.xe}, c1 * gen_coeff * c2);
  }
  return out;
}

}  // namespace

PB cross_tauB(const RewriteEngine& eng, const TwistTable& t, int p, int j, int a, int b) {
  if (j == 0) return PB({a, b, 0});
  PB out;
  for (const auto& [k1, c1] : cross_one_y(eng, t, p, a, b).terms())
    for (const auto& [k2, c2] : cross_tauB(eng, t, p, j - 1, k1.a, k1.b).terms())
      out.add({k2.a, k2.b, k2.w + k1.w}, c1 * c2);
  return out;
}

BP cross_tauB_inv(const RewriteEngine& eng, const TwistTable& t, int p, int a, int b, int j) {
  if (j == 0) return BP({0, a, b});
  BP out;
  for (const auto& [k1, c1] : cross_one_y_inv(eng, t, p, a, b).terms())
    for (const auto& [k2, c2] : cross_tauB_inv(eng, t, p, k1.a, k1.b, j - 1).terms())
      out.add({k1.w + k2.w, k2.a, k2.b}, c1 * c2);
  return out;
}

AQ cross_tauA(const RewriteEngine& eng, const TwistTable& t, int q, int c, int d, int i) {
  if (i == 0) return AQ({0, c, d});
  AQ out;
  for (const auto& [k1, c1] : cross_one_x(eng, t, q, c, d).terms())
    for (const auto& [k2, c2] : cross_tauA(eng, t, q, k1.c, k1.d, i - 1).terms())
      out.add({k1.u + k2.u, k2.c, k2.d}, c1 * c2);
  return out;
}

QA cross_tauA_inv(const RewriteEngine& eng, const TwistTable& t, int q, int i, int c, int d) {
  if (i == 0) return QA({c, d, 0});
  QA out;
  for (const auto& [k1, c1] : cross_one_x_inv(eng, t, q, c, d).terms())
    for (const auto& [k2, c2] : cross_tauA_inv(eng, t, q, i - 1, k1.c, k1.d).terms())
      out.add({k2.c, k2.d, k2.u + k1.u}, c1 * c2);
  return out;
}

// ---- the solver -----------------------------------------------------------

namespace {

// Index maps for the degree-2 coordinate spaces used by the solves.
template <class Key>
std::vector<Key> degree2_keys_pb(int p) {
  std::vector<Key> keys;
  for (int a = 0; a + p <= 2; ++a)
    for (int b = 0; a + b + p <= 2; ++b) {
      int w = 2 - p - a - b;
      keys.push_back(Key{a, b, w});
    }
  return keys;
}

template <class Key>
std::size_t index_of(const std::vector<Key>& keys, const Key& k) {
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i] == k) return i;
  throw std::logic_error("lift_twist: key out of expected degree");
}

}  // namespace

TwistTable lift_twist(const RewriteEngine& eng) {
  TwistTable table;
  TwistTable dummy;  // plain crossings (p = q = 0) never consult the table

  // tau_{B,1}: solve (d (x) 1) T = tau_{B,0} (1 (x) d)(y (x) e1) over the
  // internal-degree-2 ansatz {x e1 (x) 1, e1 x (x) 1, e1 (x) y}.
  {
    std::vector<PBKey> ansatz = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<PBKey> coords = degree2_keys_pb<PBKey>(0);
    QMatrix m(coords.size(), ansatz.size());
    for (std::size_t j = 0; j < ansatz.size(); ++j) {
      const auto& k = ansatz[j];
      m.at(index_of(coords, PBKey{k.a + 1, k.b, k.w}), j) += 1;
      m.at(index_of(coords, PBKey{k.a, k.b + 1, k.w}), j) -= 1;
    }
    PB rhs = cross_tauB(eng, dummy, 0, 1, 1, 0) - cross_tauB(eng, dummy, 0, 1, 0, 1);
    QVector b(coords.size());
    for (const auto& [k, c] : rhs.terms()) b[index_of(coords, k)] = c;
    auto sol = m.solve(b);
    if (!sol) throw std::logic_error("lift_twist: no chain lift for tau_{B,1}");
    table.unique_B = m.kernel_basis().empty();
    for (std::size_t j = 0; j < ansatz.size(); ++j) table.tauB1.add(ansatz[j], (*sol)[j]);
  }

  // tau_{1,A}: solve (1 (x) d) T = tau_{0,A} (d (x) 1)(e'1 (x) x) over
  // {x (x) e'1, 1 (x) y e'1, 1 (x) e'1 y}.
  {
    std::vector<AQKey> ansatz = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<AQKey> coords;
    for (int u = 0; u <= 2; ++u)
      for (int c = 0; u + c <= 2; ++c) coords.push_back({u, c, 2 - u - c});
    QMatrix m(coords.size(), ansatz.size());
    for (std::size_t j = 0; j < ansatz.size(); ++j) {
      const auto& k = ansatz[j];
      m.at(index_of(coords, AQKey{k.u, k.c + 1, k.d}), j) += 1;
      m.at(index_of(coords, AQKey{k.u, k.c, k.d + 1}), j) -= 1;
    }
    AQ rhs = cross_tauA(eng, dummy, 0, 1, 0, 1) - cross_tauA(eng, dummy, 0, 0, 1, 1);
    QVector b(coords.size());
    for (const auto& [k, c] : rhs.terms()) b[index_of(coords, k)] = c;
    auto sol = m.solve(b);
    if (!sol) throw std::logic_error("lift_twist: no chain lift for tau_{1,A}");
    table.unique_A = m.kernel_basis().empty();
    for (std::size_t j = 0; j < ansatz.size(); ++j) table.tau1A.add(ansatz[j], (*sol)[j]);
  }

  check_forward_shape(table);

  // Inverse single crossings: solve forward(xi) = e1 (x) y resp. x (x) e'1
  // on the same degree-2 blocks.
  {
    std::vector<BPKey> ansatz = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<PBKey> coords = degree2_keys_pb<PBKey>(1);
    QMatrix m(coords.size(), ansatz.size());
    for (std::size_t j = 0; j < ansatz.size(); ++j) {
      const auto& k = ansatz[j];
      for (const auto& [k2, c] : cross_tauB(eng, table, 1, k.w, k.a, k.b).terms())
        m.at(index_of(coords, k2), j) += c;
    }
    QVector b(coords.size());
    b[index_of(coords, PBKey{0, 0, 1})] = 1;
    auto sol = m.solve(b);
    if (!sol) throw std::logic_error("lift_twist: tau_{B,1} not invertible in degree 2");
    for (std::size_t j = 0; j < ansatz.size(); ++j) table.invTauB1.add(ansatz[j], (*sol)[j]);
  }
  {
    std::vector<QAKey> ansatz = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // images live in A (x) Q_1, whose generator already carries degree 1
    std::vector<AQKey> coords = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    QMatrix m(coords.size(), ansatz.size());
    for (std::size_t j = 0; j < ansatz.size(); ++j) {
      const auto& k = ansatz[j];
      for (const auto& [k2, c] : cross_tauA(eng, table, 1, k.c, k.d, k.u).terms())
        m.at(index_of(coords, k2), j) += c;
    }
    QVector b(coords.size());
    b[index_of(coords, AQKey{1, 0, 0})] = 1;
    auto sol = m.solve(b);
    if (!sol) throw std::logic_error("lift_twist: tau_{1,A} not invertible in degree 2");
    for (std::size_t j = 0; j < ansatz.size(); ++j) table.invTau1A.add(ansatz[j], (*sol)[j]);
  }

  check_table_shape(table);
  return table;
}

// ---- verification ---------------------------------------------------------

Report verify_compatibility(const RewriteEngine& eng, const TwistTable& t, int N) {
  Report rep{"koszul-compatibility", {}};
  if (N < 2) throw std::invalid_argument("verify_compatibility: N >= 2 required");

  // (a) chain-map equations, both sides, plus the augmentation level.
  bool chain_ok = true;
  std::string chain_detail;
  for (int j = 0; j <= N && chain_ok; ++j)
    for (int a = 0; j + a + 1 <= N && chain_ok; ++a)
      for (int b = 0; j + a + b + 1 <= N && chain_ok; ++b) {
        PB lhs;
        for (const auto& [k, c] : cross_tauB(eng, t, 1, j, a, b).terms()) {
          lhs.add({k.a + 1, k.b, k.w}, c);
          lhs.add({k.a, k.b + 1, k.w}, -c);
        }
        PB rhs = cross_tauB(eng, t, 0, j, a + 1, b) - cross_tauB(eng, t, 0, j, a, b + 1);
        if (!(lhs == rhs)) {
          chain_ok = false;
          chain_detail = "tau_{B,*} chain map fails at (j,a,b)=(" + std::to_string(j) + "," +
                         std::to_string(a) + "," + std::to_string(b) + ")";
        }
        AQ lhsA;
        for (const auto& [k, c] : cross_tauA(eng, t, 1, a, b, j).terms()) {
          lhsA.add({k.u, k.c + 1, k.d}, c);
          lhsA.add({k.u, k.c, k.d + 1}, -c);
        }
        AQ rhsA = cross_tauA(eng, t, 0, a + 1, b, j) - cross_tauA(eng, t, 0, a, b + 1, j);
        if (chain_ok && !(lhsA == rhsA)) {
          chain_ok = false;
          chain_detail = "tau_{*,A} chain map fails at (i,c,d)=(" + std::to_string(j) + "," +
                         std::to_string(a) + "," + std::to_string(b) + ")";
        }
        // augmentation: collapsing tau_{B,0} recovers tau
        AlgebraElement aug;
        for (const auto& [k, c] : cross_tauB(eng, t, 0, j, a, b).terms())
          aug.add(Monomial{k.a + k.b, k.w}, c);
        if (chain_ok && !(aug == eng.cross_ba(j, a + b))) {
          chain_ok = false;
          chain_detail = "tau_{B,0} does not lift tau";
        }
      }
  rep.add("chain-map lifts", chain_ok, chain_detail);

  // (b) bimodule-compatibility: lifted crossings against the two-sided
  // A- (resp. B-) action, mixing plain and lifted twists.
  bool bimod_ok = true;
  std::string bimod_detail;
  for (int p = 0; p <= 1 && bimod_ok; ++p)
    for (int j = 0; j <= N && bimod_ok; ++j)
      for (int s = 0; j + s + p <= N && bimod_ok; ++s)
        for (int a = 0; j + s + a + p <= N && bimod_ok; ++a)
          for (int b = 0; j + s + a + b + p <= N && bimod_ok; ++b)
            for (int tt = 0; j + s + a + b + tt + p <= N && bimod_ok; ++tt) {
              PB lhs = cross_tauB(eng, t, p, j, s + a, b + tt);
              PB rhs;
              for (const auto& [m1, c1] : eng.cross_ba(j, s).terms())
                for (const auto& [k, c2] : cross_tauB(eng, t, p, m1.ye, a, b).terms())
                  for (const auto& [m2, c3] : eng.cross_ba(k.w, tt).terms())
                    rhs.add({m1.xe + k.a, k.b + m2.xe, m2.ye}, c1 * c2 * c3);
              if (!(lhs == rhs)) {
                bimod_ok = false;
                bimod_detail = "B-side bimodule diagram fails at (p,j,s,a,b,t)=(" +
                               std::to_string(p) + "," + std::to_string(j) + "," +
                               std::to_string(s) + "," + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(tt) + ")";
              }
              if (!bimod_ok) break;
              AQ lhsA = cross_tauA(eng, t, p, s + a, b + tt, j);
              AQ rhsA;
              for (const auto& [m1, c1] : eng.cross_ba(tt, j).terms())
                for (const auto& [k, c2] : cross_tauA(eng, t, p, a, b, m1.xe).terms())
                  for (const auto& [m2, c3] : eng.cross_ba(s, k.u).terms())
                    rhsA.add({m2.xe, m2.ye + k.c, k.d + m1.ye}, c1 * c2 * c3);
              if (!(lhsA == rhsA)) {
                bimod_ok = false;
                bimod_detail = "A-side bimodule diagram fails at (q,i,s,c,d,t)=(" +
                               std::to_string(p) + "," + std::to_string(j) + "," +
                               std::to_string(s) + "," + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(tt) + ")";
              }
            }
  rep.add("bimodule compatibility", bimod_ok, bimod_detail);

  // (c) bijectivity per internal degree + two-sided inverse composition.
  bool bij_ok = true;
  std::string bij_detail;
  for (int p = 0; p <= 1 && bij_ok; ++p) {
    for (int n = p; n <= N && bij_ok; ++n) {
      std::vector<BPKey> dom;
      for (int j = 0; j + p <= n; ++j)
        for (int a = 0; j + a + p <= n; ++a) dom.push_back({j, a, n - p - j - a});
      std::vector<PBKey> codom;
      for (const auto& k : dom) codom.push_back({k.a, k.b, k.w});
      QMatrix m(codom.size(), dom.size());
      for (std::size_t col = 0; col < dom.size(); ++col)
        for (const auto& [k, c] : cross_tauB(eng, t, p, dom[col].w, dom[col].a, dom[col].b).terms())
          m.at(index_of(codom, k), col) += c;
      if (m.rank() != dom.size()) {
        bij_ok = false;
        bij_detail = "tau_{B," + std::to_string(p) + "} not bijective in degree " + std::to_string(n);
      }
    }
    for (int j = 0; j <= N && bij_ok; ++j)
      for (int a = 0; j + a + p <= N && bij_ok; ++a)
        for (int b = 0; j + a + b + p <= N && bij_ok; ++b) {
          BP round;
          for (const auto& [k, c] : cross_tauB(eng, t, p, j, a, b).terms())
            round.add(cross_tauB_inv(eng, t, p, k.a, k.b, k.w), c);
          if (!(round == BP({j, a, b}))) {
            bij_ok = false;
            bij_detail = "tau_{B}^{-1} tau_{B} != id";
          }
          QA roundA;
          for (const auto& [k, c] : cross_tauA(eng, t, p, a, b, j).terms())
            roundA.add(cross_tauA_inv(eng, t, p, k.u, k.c, k.d), c);
          if (bij_ok && !(roundA == QA({a, b, j}))) {
            bij_ok = false;
            bij_detail = "tau_{A}^{-1} tau_{A} != id";
          }
        }
  }
  rep.add("bijectivity and inverses", bij_ok, bij_detail);
  return rep;
}

}  // namespace gerst
