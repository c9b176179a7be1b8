#include "waring/apolarity.hpp"

#include "waring/errors.hpp"

namespace waring {

RationalMatrix catalecticant(const BinaryForm& f, int i) {
  const int d = f.degree;
  if (i < 0 || i > d) throw DegreeError("catalecticant degree out of range");
  RationalMatrix m(d - i + 1, i + 1);
  for (int j = 0; j <= i; ++j) {
    for (int k = 0; k <= d - i; ++k) {
      Integer w = falling_factorial(k + j, j) * falling_factorial(d - k - j, i - j);
      m(k, j) = f.coeffs[k + j] * Rational(w);
    }
  }
  return m;
}

std::vector<RationalVector> apolar_kernel(const BinaryForm& f, int i) {
  const int d = f.degree;
  if (i > d) {
    // The pairing into negative degree is the zero map.
    std::vector<RationalVector> basis;
    for (int j = 0; j <= i; ++j) {
      RationalVector v = RationalVector::Zero(i + 1);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_basis(catalecticant(f, i));
}

HilbertFunctionTable hilbert_function(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  HilbertFunctionTable t;
  t.degree = f.degree;
  t.values.resize(f.degree + 1);
  for (int i = 0; i <= f.degree; ++i) t.values[i] = matrix_rank(catalecticant(f, i));
  return t;
}

std::pair<int, BinaryForm> min_apolar_form(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  const int d = f.degree;
  auto has_annihilator = [&](int i) {
    if (i > d) return true;
    return matrix_rank(catalecticant(f, i)) < i + 1;
  };
  // Annihilators at degree i exist iff i >= d1, so binary search works.
  int lo = 1, hi = d + 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (has_annihilator(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  const int d1 = lo;
  std::vector<RationalVector> ker = apolar_kernel(f, d1);
  RationalVector g;
  if (ker.size() == 1) {
    g = ker[0];
  } else {
    // Two-dimensional kernel (only when d1 = d2): take the reduced-echelon
    // basis row with the lowest pivot, which is zero at the other pivot.
    RationalMatrix rows(static_cast<int>(ker.size()), d1 + 1);
    for (std::size_t r = 0; r < ker.size(); ++r) rows.row(static_cast<int>(r)) = ker[r].transpose();
    rref(rows);
    g = rows.row(0).transpose();
  }
  return {d1, BinaryForm(d1, normalize_primitive(g), RingRole::dual)};
}

ApolarPair apolar_generators(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  if (f.degree < 1) throw DegreeError("apolar_generators needs degree >= 1");
  auto [d1, g1] = min_apolar_form(f);
  const int d2 = f.degree + 2 - d1;
  // Degree-d2 slice of the ideal generated by g1.
  const int m = d2 - d1;
  RationalMatrix sub(m + 1, d2 + 1);
  for (int k = 0; k <= m; ++k) {
    BinaryForm mult = g1 * BinaryForm::monomial(k, m - k, 1, RingRole::dual);
    sub.row(k) = mult.coeffs.transpose();
  }
  std::vector<int> pivots = rref(sub);
  RationalVector g2;
  bool found = false;
  for (const RationalVector& v : apolar_kernel(f, d2)) {
    RationalVector red = reduce_mod_rowspace(v, sub, pivots);
    bool nonzero = false;
    for (int i = 0; i < red.size(); ++i)
      if (red[i] != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      g2 = normalize_primitive(red);
      found = true;
      break;
    }
  }
  if (!found)
    throw DomainError("apolar ideal not a complete intersection (unexpected)");
  ApolarPair pair;
  pair.g1 = g1;
  pair.g2 = BinaryForm(d2, g2, RingRole::dual);
  pair.d1 = d1;
  pair.d2 = d2;
  return pair;
}

}  // namespace waring
