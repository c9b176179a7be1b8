#include "waring/decomposition.hpp"

#include <random>

#include "waring/errors.hpp"
#include "waring/roots.hpp"

namespace waring {

BinaryForm squarefree_annihilator(const BinaryForm& f, const RankCertificate& cert,
                                  std::uint64_t seed) {
  if (!cert.witness) {
    // Degree-1 fast path: the single annihilating linear form.
    ApolarPair pair = apolar_generators(f);
    return pair.g1;
  }
  const ApolarPair& pair = *cert.witness;
  if (cert.g1_square_free && pair.d1 == cert.rank) return pair.g1;
  // rank = d2 here; search the degree-d2 slice g2 + m*g1 for a square-free
  // element. A generic member works, so small integer coefficients suffice.
  const int md = pair.d2 - pair.d1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int attempt = 0; attempt < kPencilBudget; ++attempt) {
    BinaryForm m = BinaryForm::zero(md, RingRole::dual);
    if (attempt > 0) {
      for (int i = 0; i <= md; ++i) m.coeffs[i] = coeff(rng);
    }
    BinaryForm h = m.is_zero() ? pair.g2 : pair.g2 + m * pair.g1;
    if (!h.is_zero() && is_square_free(h)) return h;
  }
  throw SearchFailedError("no square-free annihilator found within retry budget");
}

std::vector<std::pair<BigComplex, BigComplex>> projective_roots(
    const BinaryForm& h, unsigned long prec) {
  if (h.is_zero()) throw ZeroFormError();
  if (h.degree < 1) throw DegreeError("projective_roots needs degree >= 1");
  if (!is_square_free(h)) throw DomainError("projective_roots needs a square-free form");
  const int m = h.degree;
  RationalVector q = dehomogenize(h);
  const int t = poly_degree(q);
  std::vector<std::pair<BigComplex, BigComplex>> points;
  if (t < m) {
    // Y | h exactly once (square-free), giving the point at infinity.
    points.emplace_back(BigComplex(Rational(1), prec), BigComplex(prec));
  }
  BigFloat norm(0, prec);
  for (int i = 0; i <= m; ++i) {
    BigFloat c(abs(h.coeffs[i]), prec);
    if (c > norm) norm = c;
  }
  BigComplex one(Rational(1), prec);
  for (const BigComplex& u : univariate_roots(q, prec)) {
    BigComplex a(prec), b(prec);
    BigFloat au = u.abs();
    if (au <= 1) {
      a = u;
      b = one;
    } else {
      a = one;
      b = one / u;
    }
    // Residual guard on the homogeneous value at the point.
    BigComplex val(prec);
    BigComplex ap = one;
    for (int i = 0; i <= m; ++i) {
      BigComplex bp = one;
      for (int k = 0; k < m - i; ++k) bp = bp * b;
      val = val + BigComplex(h.coeffs[i], prec) * ap * bp;
      ap = ap * a;
    }
    double bound = log2_abs(norm) - static_cast<double>(prec) / 2.0;
    if (log2_abs(val.abs()) > bound)
      throw SearchFailedError("root residual exceeds tolerance");
    points.emplace_back(a, b);
  }
  return points;
}

namespace {

// Solve the hermitian-positive system A^H A c = A^H f by Gaussian
// elimination with partial pivoting on magnitudes.
std::vector<BigComplex> solve_least_squares(
    const std::vector<std::vector<BigComplex>>& a,
    const std::vector<BigComplex>& rhs, unsigned long prec) {
  const int rows = static_cast<int>(a.size());
  const int n = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<std::vector<BigComplex>> m(n, std::vector<BigComplex>(n + 1, BigComplex(prec)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigComplex acc(prec);
      for (int k = 0; k < rows; ++k) acc = acc + a[k][i].conj() * a[k][j];
      m[i][j] = acc;
    }
    BigComplex acc(prec);
    for (int k = 0; k < rows; ++k) acc = acc + a[k][i].conj() * rhs[k];
    m[i][n] = acc;
  }
  for (int col = 0; col < n; ++col) {
    int best = col;
    BigFloat bestmag = m[col][col].abs2();
    for (int i = col + 1; i < n; ++i) {
      BigFloat mag = m[i][col].abs2();
      if (mag > bestmag) {
        best = i;
        bestmag = mag;
      }
    }
    std::swap(m[col], m[best]);
    if (m[col][col].is_zero())
      throw SearchFailedError("singular normal equations in coefficient solve");
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      BigComplex f = m[i][col] / m[col][col];
      for (int j = col; j <= n; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  std::vector<BigComplex> c(n, BigComplex(prec));
  for (int i = 0; i < n; ++i) c[i] = m[i][n] / m[i][i];
  return c;
}

}  // namespace

WaringDecomposition decompose(const BinaryForm& f, unsigned long prec,
                              std::uint64_t seed) {
  if (f.is_zero()) throw ZeroFormError();
  if (f.degree < 1) throw DegreeError("decompose needs degree >= 1");
  const int d = f.degree;
  RankCertificate cert = waring_rank(f);
  BinaryForm h = squarefree_annihilator(f, cert, seed);
  // Exact check before any numerics.
  if (!apolar_apply(h, f).is_zero())
    throw DomainError("annihilator check failed (internal)");
  auto points = projective_roots(h, prec);
  const int r = static_cast<int>(points.size());

  // Coefficient k of (a x + b y)^d is binom(d,k) a^k b^(d-k).
  std::vector<Integer> binom(d + 1);
  binom[0] = 1;
  for (int k = 1; k <= d; ++k) binom[k] = binom[k - 1] * (d - k + 1) / k;

  std::vector<std::vector<BigComplex>> a(d + 1, std::vector<BigComplex>(r, BigComplex(prec)));
  for (int i = 0; i < r; ++i) {
    BigComplex one(Rational(1), prec);
    std::vector<BigComplex> ap(d + 1, one), bp(d + 1, one);
    for (int k = 1; k <= d; ++k) {
      ap[k] = ap[k - 1] * points[i].first;
      bp[k] = bp[k - 1] * points[i].second;
    }
    for (int k = 0; k <= d; ++k)
      a[k][i] = BigComplex(Rational(binom[k]), prec) * ap[k] * bp[d - k];
  }
  std::vector<BigComplex> rhs(d + 1, BigComplex(prec));
  for (int k = 0; k <= d; ++k) rhs[k] = BigComplex(f.coeffs[k], prec);
  std::vector<BigComplex> coeffs = solve_least_squares(a, rhs, prec);

  WaringDecomposition dec;
  dec.precision_bits = prec;
  for (int i = 0; i < r; ++i)
    dec.terms.push_back({coeffs[i], points[i].first, points[i].second});

  BigFloat worst(0, prec), fnorm(0, prec);
  for (int k = 0; k <= d; ++k) {
    BigComplex diff = rhs[k];
    for (int i = 0; i < r; ++i) diff = diff - coeffs[i] * a[k][i];
    BigFloat m = diff.abs();
    if (m > worst) worst = m;
    BigFloat fm(abs(f.coeffs[k]), prec);
    if (fm > fnorm) fnorm = fm;
  }
  dec.residual = BigFloat(worst / fnorm, prec);
  return dec;
}

}  // namespace waring
