#include "gerst/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gerst {

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.m != b.m) throw std::invalid_argument("cochain degree mismatch");
  Cochain out = a;
  for (const auto& [g, v] : b.values) out.set(g, out.value(g) + v);
  return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  if (a.m != b.m) throw std::invalid_argument("cochain degree mismatch");
  Cochain out = a;
  for (const auto& [g, v] : b.values) out.set(g, out.value(g) - v);
  return out;
}

Cochain operator*(const Rational& c, const Cochain& a) {
  Cochain out;
  out.m = a.m;
  for (const auto& [g, v] : a.values) out.set(g, c * v);
  return out;
}

std::size_t GradedCohomologyReport::dim(int m, int d) const {
  const HHEntry* e = find(m, d);
  return e ? e->dimension : 0;
}

const HHEntry* GradedCohomologyReport::find(int m, int d) const {
  for (const auto& e : entries)
    if (e.hom_degree == m && e.internal_degree == d) return &e;
  return nullptr;
}

HomComplex::HomComplex(const TtpComplex& ttp) : ttp_(ttp) {}

AlgebraElement HomComplex::apply(const Cochain& c, const BimodElement& el) const {
  AlgebraElement out;
  const auto& eng = ttp_.engine();
  for (const auto& [k, coeff] : el.terms()) {
    if (k.g.degree() != c.m) continue;
    AlgebraElement v = c.value(k.g);
    if (v.is_zero()) continue;
    out.add(eng.multiply(AlgebraElement(k.l), v, AlgebraElement(k.r)), coeff);
  }
  return out;
}

Cochain HomComplex::hom_differential(const Cochain& c) const {
  if (c.m >= 2) throw std::invalid_argument("hom_differential: top degree");
  Cochain out;
  out.m = c.m + 1;
  for (FGen g : ttp_.gens(c.m + 1)) out.set(g, apply(c, ttp_.differential_gen(g)));
  return out;
}

bool HomComplex::is_cocycle(const Cochain& c) const {
  if (c.m >= 2) return true;
  return hom_differential(c).is_zero();
}

std::vector<std::pair<FGen, Monomial>> HomComplex::coords(int m, int d) const {
  std::vector<std::pair<FGen, Monomial>> out;
  int vd = d + m;  // value degree
  if (vd < 0) return out;
  for (FGen g : ttp_.gens(m))
    for (int i = vd; i >= 0; --i) out.push_back({g, Monomial{i, vd - i}});
  return out;
}

QVector HomComplex::to_vector(const Cochain& c, int m, int d) const {
  auto cs = coords(m, d);
  QVector v(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) v[i] = c.value(cs[i].first).coeff(cs[i].second);
  return v;
}

Cochain HomComplex::from_vector(const QVector& v, int m, int d) const {
  auto cs = coords(m, d);
  Cochain c;
  c.m = m;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (v[i] == 0) continue;
    AlgebraElement val = c.value(cs[i].first);
    val.add(cs[i].second, v[i]);
    c.set(cs[i].first, std::move(val));
  }
  return c;
}

QMatrix HomComplex::differential_matrix(int m, int d) const {
  auto dom = coords(m, d);
  auto codom = coords(m + 1, d);
  QMatrix mat(codom.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Cochain basis;
    basis.m = m;
    basis.set(dom[j].first, AlgebraElement(dom[j].second));
    QVector col = to_vector(hom_differential(basis), m + 1, d);
    for (std::size_t i = 0; i < codom.size(); ++i) mat.at(i, j) = col[i];
  }
  return mat;
}

EchelonSpan HomComplex::coboundary_span(int m, int d) const {
  EchelonSpan span;
  if (m == 0) return span;
  auto dom = coords(m - 1, d);
  for (const auto& [g, mono] : dom) {
    Cochain basis;
    basis.m = m - 1;
    basis.set(g, AlgebraElement(mono));
    span.insert(to_vector(hom_differential(basis), m, d));
  }
  return span;
}

namespace {

// internal degrees present in a cochain
std::vector<int> internal_degrees(const Cochain& c) {
  std::vector<int> out;
  for (const auto& [g, v] : c.values)
    for (const auto& [mono, coeff] : v.terms()) {
      int d = mono.degree() - g.degree();
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Cochain homogeneous_component(const Cochain& c, int d) {
  Cochain out;
  out.m = c.m;
  for (const auto& [g, v] : c.values) out.set(g, homogeneous_part(v, d + g.degree()));
  return out;
}

}  // namespace

std::optional<Cochain> HomComplex::coboundary_witness(const Cochain& c) const {
  if (c.m == 0) {
    if (c.is_zero()) return Cochain{0, {}};
    return std::nullopt;
  }
  Cochain witness;
  witness.m = c.m - 1;
  for (int d : internal_degrees(c)) {
    QMatrix mat = differential_matrix(c.m - 1, d);
    auto sol = mat.solve(to_vector(homogeneous_component(c, d), c.m, d));
    if (!sol) return std::nullopt;
    witness = witness + from_vector(*sol, c.m - 1, d);
  }
  return witness;
}

Cochain HomComplex::reduce_mod_coboundaries(const Cochain& c) const {
  if (!is_cocycle(c)) throw std::invalid_argument("reduce_mod_coboundaries: not a cocycle");
  if (c.m == 0) return c;
  Cochain out;
  out.m = c.m;
  for (int d : internal_degrees(c)) {
    EchelonSpan span = coboundary_span(c.m, d);
    QVector reduced = span.reduce(to_vector(homogeneous_component(c, d), c.m, d));
    out = out + from_vector(reduced, c.m, d);
  }
  return out;
}

GradedCohomologyReport HomComplex::hh_dimensions(int N) const {
  GradedCohomologyReport rep;
  rep.bound = N;
  for (int m = 0; m <= 2; ++m) {
    for (int d = -m; d <= N; ++d) {
      HHEntry e;
      e.hom_degree = m;
      e.internal_degree = d;
      auto cs = coords(m, d);
      if (cs.empty()) continue;

      std::vector<QVector> kernel;
      if (m < 2) {
        kernel = differential_matrix(m, d).kernel_basis();
      } else {
        for (std::size_t i = 0; i < cs.size(); ++i) {
          QVector v(cs.size());
          v[i] = 1;
          kernel.push_back(std::move(v));
        }
      }
      EchelonSpan image = coboundary_span(m, d);
      EchelonSpan reps;
      for (const auto& v : kernel) reps.insert(image.reduce(v));
      e.dimension = reps.dim();
      for (const auto& r : reps.rows()) e.representatives.push_back(from_vector(r, m, d));
      for (const auto& r : image.rows()) e.coboundary_basis.push_back(from_vector(r, m, d));
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

Cochain HomComplex::derivation_cochain(const AlgebraElement& dx, const AlgebraElement& dy) const {
  Cochain c;
  c.m = 1;
  c.set(FGen{1, 0}, dx);
  c.set(FGen{0, 1}, dy);
  return c;
}

Cochain HomComplex::inner_derivation(const AlgebraElement& w) const {
  const auto& eng = ttp_.engine();
  return derivation_cochain(eng.commutator(w, mono(1, 0)), eng.commutator(w, mono(0, 1)));
}

DerivationForm HomComplex::derivation_canonical_form(const Cochain& c) const {
  const TwistSpec& tw = ttp_.engine().twist();
  if (!(tw.q == 1 && tw.alpha == 1))
    throw std::invalid_argument("derivation_canonical_form: Jordan twist only");
  if (c.m != 1 || !is_cocycle(c))
    throw std::invalid_argument("derivation_canonical_form: needs a 1-cocycle");

  const auto& eng = ttp_.engine();
  AlgebraElement yv = c.value(FGen{0, 1});
  AlgebraElement xv = c.value(FGen{1, 0});
  int bound = std::max({degree(yv), degree(xv), 1});

  // unknowns: alpha | p_0..p_bound | w-coefficients (degrees 1..bound)
  std::vector<Monomial> wmons;
  for (int dd = 1; dd <= bound; ++dd)
    for (int i = dd; i >= 0; --i) wmons.push_back({i, dd - i});
  std::size_t ncols = 1 + (bound + 1) + wmons.size();

  // rows: coefficients of both target polynomials, degrees 0..bound+1
  std::vector<Monomial> rows;
  for (int dd = 0; dd <= bound + 1; ++dd)
    for (int i = dd; i >= 0; --i) rows.push_back({i, dd - i});
  std::map<Monomial, std::size_t> rowidx;
  for (std::size_t i = 0; i < rows.size(); ++i) rowidx[rows[i]] = i;

  QMatrix mat(2 * rows.size(), ncols);
  QVector rhs(2 * rows.size());
  auto put = [&](bool second, const AlgebraElement& e, std::size_t col, const Rational& scale) {
    for (const auto& [mono_, coeff] : e.terms())
      mat.at(rowidx.at(mono_) + (second ? rows.size() : 0), col) += scale * coeff;
  };
  const AlgebraElement x1 = mono(1, 0), y1 = mono(0, 1);
  // equation 1: alpha*x + p + [w,y] = yv
  put(false, x1, 0, Rational(1));
  for (int k = 0; k <= bound; ++k) put(false, mono(0, k), 1 + k, Rational(1));
  for (std::size_t w = 0; w < wmons.size(); ++w)
    put(false, eng.commutator(AlgebraElement(wmons[w]), y1), 1 + (bound + 1) + w, Rational(1));
  // equation 2: p'*x + [w,x] = xv, with p' multiplying from the left
  for (int k = 1; k <= bound; ++k)
    put(true, eng.multiply(mono(0, k - 1), x1), 1 + k, Rational(k));
  for (std::size_t w = 0; w < wmons.size(); ++w)
    put(true, eng.commutator(AlgebraElement(wmons[w]), x1), 1 + (bound + 1) + w, Rational(1));
  for (const auto& [mono_, coeff] : yv.terms()) rhs[rowidx.at(mono_)] = coeff;
  for (const auto& [mono_, coeff] : xv.terms()) rhs[rowidx.at(mono_) + rows.size()] = coeff;

  auto sol = mat.solve(rhs);
  if (!sol)
    throw std::runtime_error("derivation_canonical_form: inconsistent system");

  DerivationForm form;
  form.alpha = (*sol)[0];
  for (int k = 0; k <= bound; ++k) form.p.add(Monomial{0, k}, (*sol)[1 + k]);
  for (std::size_t w = 0; w < wmons.size(); ++w) form.w.add(wmons[w], (*sol)[1 + (bound + 1) + w]);
  return form;
}

}  // namespace gerst
