#include "gerst/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace gerst {

void QMatrix::append_row(const QVector& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("QMatrix::append_row: size mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pr = r;
    while (pr < rows_ && at(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (std::size_t k = c; k < cols_; ++k) std::swap(at(pr, k), at(r, k));
    Rational inv = Rational(1) / at(r, c);
    for (std::size_t k = c; k < cols_; ++k) at(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rational f = at(i, c);
      for (std::size_t k = c; k < cols_; ++k) at(i, k) -= f * at(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref().size();
}

std::vector<QVector> QMatrix::kernel_basis() const {
  QMatrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("QMatrix::solve: size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  auto pivots = aug.rref();
  QVector x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols_) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = aug.at(r, cols_);
  }
  return x;
}

bool EchelonSpan::insert(QVector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Rational inv = Rational(1) / v[p];
  for (auto& e : v) e *= inv;
  // keep rows sorted by pivot
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  // back-substitute to keep reduced form
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == pos) continue;
    Rational f = rows_[i][p];
    if (f == 0) continue;
    for (std::size_t k = 0; k < rows_[i].size(); ++k) rows_[i][k] -= f * rows_[pos][k];
  }
  return true;
}

QVector EchelonSpan::reduce(QVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * rows_[i][k];
  }
  return v;
}

bool EchelonSpan::contains(const QVector& v) const {
  QVector r = reduce(v);
  for (const auto& e : r)
    if (e != 0) return false;
  return true;
}

}  // namespace gerst
