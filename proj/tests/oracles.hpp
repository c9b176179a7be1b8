// Test-only oracles, independent of the library's elimination paths.
#pragma once

#include <random>
#include <vector>

#include "waring/binary_form.hpp"

namespace waring::testing {

/// Fraction-free Bareiss rank over the integers (denominators cleared
/// first). Independent of linalg.cpp's rational elimination.
inline int bareiss_rank(const RationalMatrix& in) {
  const int rows = static_cast<int>(in.rows());
  const int cols = static_cast<int>(in.cols());
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int i = 0; i < rows; ++i) {
    Integer l = 1;
    for (int j = 0; j < cols; ++j) l = lcm(l, in(i, j).get_den());
    for (int j = 0; j < cols; ++j)
      m[i][j] = in(i, j).get_num() * (l / in(i, j).get_den());
  }
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Hilbert function of a complete intersection with generator degrees
/// (d1, d2): coefficients of (1 - t^d1)(1 - t^d2) / (1 - t)^2.
inline std::vector<int> ci_hilbert_series(int d1, int d2, int upto) {
  std::vector<int> num(d1 + d2 + 1, 0);
  num[0] = 1;
  num[d1] -= 1;
  num[d2] -= 1;
  num[d1 + d2] += 1;
  // Divide by (1 - t) twice: prefix sums.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 1; i < num.size(); ++i) num[i] += num[i - 1];
  num.resize(upto + 1, 0);
  return num;
}

inline BinaryForm random_form(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  for (;;) {
    BinaryForm f = BinaryForm::zero(degree);
    for (int i = 0; i <= degree; ++i) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      f.coeffs[i] = c;
    }
    if (!f.is_zero()) return f;
  }
}

inline BinaryForm random_linear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  for (;;) {
    BinaryForm l = BinaryForm::zero(1);
    l.coeffs[0] = num(rng);
    l.coeffs[1] = num(rng);
    if (!l.is_zero()) return l;
  }
}

inline CoordinateChange random_change(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  for (;;) {
    CoordinateChange m{num(rng), num(rng), num(rng), num(rng)};
    if (m.det() != 0) return m;
  }
}

}  // namespace waring::testing
