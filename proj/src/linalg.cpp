#include "wpline/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpline {

bool RowSpan::insert(QVec v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RowSpan: size mismatch");
  v = reduce(std::move(v));
  int p = -1;
  for (int c = 0; c < cols_; ++c)
    if (v[c] != 0) {
      p = c;
      break;
    }
  if (p < 0) return false;
  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  return true;
}

QVec RowSpan::reduce(QVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[piv_[i]];
    if (c != 0) {
      Rat f = c;  // rows are monic at their pivot
      for (int j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool RowSpan::contains(QVec v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

long matrix_rank(QMat m) {
  if (m.empty()) return 0;
  RowSpan span(static_cast<int>(m[0].size()));
  for (auto& r : m) span.insert(std::move(r));
  return span.dim();
}

QMat kernel_basis(const QMat& rows, int cols) {
  // Gauss-Jordan on a working copy, then read free columns.
  QMat a = rows;
  int nr = static_cast<int>(a.size());
  std::vector<int> pivot_of_row;
  std::vector<bool> col_is_pivot(cols, false);
  int r = 0;
  for (int c = 0; c < cols && r < nr; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r) continue;
      if (a[i][c] != 0) {
        Rat f = a[i][c];
        for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    pivot_of_row.push_back(c);
    col_is_pivot[c] = true;
    ++r;
  }
  QMat ker;
  for (int c = 0; c < cols; ++c) {
    if (col_is_pivot[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_of_row[i]] = -a[i][c];
    ker.push_back(std::move(v));
  }
  return ker;
}

bool solve_linear(const QMat& rows, const QVec& b, QVec& x_out) {
  int nr = static_cast<int>(rows.size());
  int cols = nr ? static_cast<int>(rows[0].size()) : 0;
  QMat a = rows;
  QVec rhs = b;
  std::vector<int> pivot_of_row;
  std::vector<bool> col_is_pivot(cols, false);
  int r = 0;
  for (int c = 0; c < cols && r < nr; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    std::swap(rhs[r], rhs[sel]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r) continue;
      if (a[i][c] != 0) {
        Rat f = a[i][c];
        for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        rhs[i] -= f * rhs[r];
      }
    }
    pivot_of_row.push_back(c);
    col_is_pivot[c] = true;
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (rhs[i] != 0) return false;
  x_out.assign(cols, Rat(0));
  for (int i = 0; i < r; ++i) x_out[pivot_of_row[i]] = rhs[i];
  return true;
}

}  // namespace wpline
