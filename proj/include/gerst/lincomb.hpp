#ifndef GERST_LINCOMB_HPP
#define GERST_LINCOMB_HPP

#include <map>
#include <utility>

#include "gerst/rational.hpp"

namespace gerst {

// Finitely supported map Key -> Rational with zero coefficients pruned on
// every mutation, so operator== is canonical equality.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;

  LinComb() = default;
  explicit LinComb(Key k, Rational c = Rational(1)) { add(std::move(k), std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Ref-qualified so that `for (... : f().terms())` materializes the map of
  // a temporary and the range-for keeps it alive.
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }

  void add(Key k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = Rational(1)) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }
  LinComb& operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
  friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
  friend LinComb operator*(const Rational& c, LinComb a) { a *= c; return a; }
  friend LinComb operator-(LinComb a) { a *= Rational(-1); return a; }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) = default;

  // Maps every key through f (which may fan out: f(key) must be a LinComb).
  template <class F>
  auto map_terms(F&& f) const {
    using Out = decltype(f(std::declval<const Key&>()));
    Out out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace gerst

#endif
