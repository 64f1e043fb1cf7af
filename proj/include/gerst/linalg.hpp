#ifndef GERST_LINALG_HPP
#define GERST_LINALG_HPP

#include <optional>
#include <vector>

#include "gerst/rational.hpp"

namespace gerst {

using QVector = std::vector<Rational>;

// Dense rational matrix, row major. Sizes here stay in the hundreds, so
// plain Gaussian elimination with first-nonzero pivoting is plenty and is
// deterministic, which the canonical-representative machinery relies on.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const QVector& row);

  // Reduced row echelon form; returns pivot column per row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Nullspace basis; free variables set to 1 one at a time in column order.
  std::vector<QVector> kernel_basis() const;

  // One solution of A x = b, free variables zero (so minimal support w.r.t.
  // the column order); nullopt when inconsistent.
  std::optional<QVector> solve(const QVector& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Row-echelon span with pivot bookkeeping, for membership tests and
// canonical reduction against a subspace.
class EchelonSpan {
 public:
  // Returns true if the vector enlarged the span.
  bool insert(QVector v);
  // Subtracts the projection onto the span along the pivot coordinates.
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<QVector>& rows() const { return rows_; }

 private:
  std::vector<QVector> rows_;        // each normalized to pivot 1
  std::vector<std::size_t> pivots_;  // increasing
};

}  // namespace gerst

#endif
