#pragma once

#include <vector>

#include "wpline/rational.hpp"

namespace wpline {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // list of rows

// Incremental row space in echelon form. insert() reduces the vector against
// the stored rows and absorbs the residual if it is nonzero.
class RowSpan {
 public:
  explicit RowSpan(int cols) : cols_(cols) {}

  // Returns true when the vector enlarged the span.
  bool insert(QVec v);
  bool contains(QVec v) const;
  QVec reduce(QVec v) const;  // residual of v modulo the span
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const QMat& rows() const { return rows_; }

 private:
  int cols_;
  QMat rows_;              // row i has pivot 1 at piv_[i], pivots strictly increasing insert order not guaranteed
  std::vector<int> piv_;
};

long matrix_rank(QMat m);

// Kernel of v -> A v for A given as rows of length `cols`.
QMat kernel_basis(const QMat& rows, int cols);

// Solve A x = b (A as rows); returns empty optional-like flag via bool.
bool solve_linear(const QMat& rows, const QVec& b, QVec& x_out);

}  // namespace wpline
