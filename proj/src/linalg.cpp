#include "waring/linalg.hpp"

#include "waring/errors.hpp"

namespace waring {

std::vector<int> rref(RationalMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int matrix_rank(RationalMatrix m) {
  // Forward elimination only.
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank) m.row(p).swap(m.row(rank));
    for (int i = rank + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      m(i, col) = 0;
      for (int j = col + 1; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<RationalVector> kernel_basis(RationalMatrix m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector reduce_mod_rowspace(RationalVector v, const RationalMatrix& rref_rows,
                                   const std::vector<int>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational f = v[pivots[r]];
    if (f == 0) continue;
    v -= f * rref_rows.row(static_cast<int>(r)).transpose();
  }
  return v;
}

RationalVector normalize_primitive(RationalVector v) {
  int lead = -1;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) throw DomainError("cannot normalize the zero vector");
  Integer l = 1;
  for (int i = 0; i < v.size(); ++i) l = lcm(l, v[i].get_den());
  Integer c = 0;
  for (int i = 0; i < v.size(); ++i)
    c = gcd(c, Integer(v[i].get_num() * (l / v[i].get_den())));
  Rational scale(l, c);
  if (v[lead] < 0) scale = -scale;
  for (int i = 0; i < v.size(); ++i) {
    v[i] *= scale;
    v[i].canonicalize();
  }
  return v;
}

}  // namespace waring
