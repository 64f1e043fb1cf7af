#ifndef GERST_COHOMOLOGY_HPP
#define GERST_COHOMOLOGY_HPP

#include <optional>

#include "gerst/linalg.hpp"
#include "gerst/ttp.hpp"

namespace gerst {

// Cochain on the total complex: an R^e-map K_m -> R, determined by its
// values on the free generators of homological degree m. Degree 3 is only
// ever the vacuous zero cochain (the complex stops at 2).
struct Cochain {
  int m = 0;
  std::map<FGen, AlgebraElement> values;

  bool is_zero() const {
    for (const auto& [g, v] : values)
      if (!v.is_zero()) return false;
    return true;
  }
  AlgebraElement value(FGen g) const {
    auto it = values.find(g);
    return it == values.end() ? AlgebraElement() : it->second;
  }
  void set(FGen g, AlgebraElement v) {
    if (v.is_zero()) values.erase(g);
    else values[g] = std::move(v);
  }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    if (a.m != b.m) return false;
    Cochain za = a, zb = b;
    std::erase_if(za.values, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(zb.values, [](const auto& kv) { return kv.second.is_zero(); });
    return za.values == zb.values;
  }
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& c, const Cochain& a);

struct HHEntry {
  int hom_degree = 0;
  int internal_degree = 0;
  std::size_t dimension = 0;
  std::vector<Cochain> representatives;     // reduced, echelonized
  std::vector<Cochain> coboundary_basis;    // echelon basis of im d*
};

struct GradedCohomologyReport {
  int bound = 0;
  std::vector<HHEntry> entries;
  std::size_t dim(int m, int d) const;
  const HHEntry* find(int m, int d) const;
};

// Theorem-4.1-style normal form of a derivation of the Jordan plane:
// dy = alpha*x + p + [w,y], dx = p'*x + [w,x] with p in k[y] and w
// normalized to have no constant term.
struct DerivationForm {
  Rational alpha;
  AlgebraElement p;  // supported on pure y-powers
  AlgebraElement w;
};

class HomComplex {
 public:
  explicit HomComplex(const TtpComplex& ttp);

  const TtpComplex& ttp() const { return ttp_; }

  AlgebraElement apply(const Cochain& c, const BimodElement& el) const;
  Cochain hom_differential(const Cochain& c) const;  // throws on m >= 2 ("top degree")
  bool is_cocycle(const Cochain& c) const;
  std::optional<Cochain> coboundary_witness(const Cochain& c) const;
  Cochain reduce_mod_coboundaries(const Cochain& c) const;  // throws on non-cocycle

  GradedCohomologyReport hh_dimensions(int N) const;

  DerivationForm derivation_canonical_form(const Cochain& c) const;  // Jordan only
  Cochain derivation_cochain(const AlgebraElement& dx, const AlgebraElement& dy) const;
  Cochain inner_derivation(const AlgebraElement& w) const;  // ad w as a 1-cochain

  // Coordinates of the internal-degree-d slice of hom degree m: pairs
  // (generator, monomial), monomials ordered x-heavy first so echelon
  // pivots prefer the ideal generated by x.
  std::vector<std::pair<FGen, Monomial>> coords(int m, int d) const;
  QVector to_vector(const Cochain& c, int m, int d) const;
  Cochain from_vector(const QVector& v, int m, int d) const;

 private:
  const TtpComplex& ttp_;
  QMatrix differential_matrix(int m, int d) const;  // C^m_d -> C^{m+1}_d
  EchelonSpan coboundary_span(int m, int d) const;  // image of C^{m-1}_d
};

}  // namespace gerst

#endif
