#include "waring/binomial.hpp"

#include <cassert>

#include "waring/errors.hpp"

namespace waring {

BinomialShape make_shape(int r, int s, int alpha, const Rational& a,
                         const Rational& b, bool swapped) {
  if (r < 0 || s < 0 || alpha < 1 || r > s)
    throw DomainError("invalid binomial shape: need 0 <= r <= s, alpha >= 1");
  if (a == 0 || b == 0) throw DomainError("binomial coefficients must be nonzero");
  BinomialShape sh;
  sh.r = r;
  sh.s = s;
  sh.alpha = alpha;
  sh.a = a;
  sh.b = b;
  sh.swapped = swapped;
  sh.delta = r + alpha - s;
  sh.q = r / alpha;
  sh.j = r % alpha;
  return sh;
}

BinomialShape normalize_binomial(const BinaryForm& f) {
  int i1 = -1, i2 = -1, terms = 0;
  for (int i = 0; i <= f.degree; ++i) {
    if (f.coeffs[i] == 0) continue;
    ++terms;
    if (i1 < 0)
      i1 = i;
    else
      i2 = i;
  }
  if (terms != 2) throw NotABinomialError(terms);
  const int d = f.degree;
  // x-exponents i1 < i2: candidate r = i1, s = d - i2, alpha = i2 - i1.
  int r = i1, s = d - i2, alpha = i2 - i1;
  if (r <= s) return make_shape(r, s, alpha, f.coeffs[i1], f.coeffs[i2], false);
  return make_shape(s, r, alpha, f.coeffs[i2], f.coeffs[i1], true);
}

BinaryForm expand_binomial(const BinomialShape& sh) {
  BinaryForm f = BinaryForm::zero(sh.degree());
  f.coeffs[sh.r] = sh.a;
  f.coeffs[sh.r + sh.alpha] = sh.b;
  return sh.swapped ? f.swapped_vars() : f;
}

RankCertificate binomial_rank(const BinomialShape& sh) {
  const bool row_s2 = sh.delta > 0 && sh.j == 0 && sh.r == sh.s && sh.alpha > 1;
  const bool row_jd = sh.delta > 0 && sh.j == sh.delta;
  const bool row_jgt = sh.delta > 0 && sh.j > sh.delta;
  // The special delta > 0 rows are pairwise exclusive.
  assert(static_cast<int>(row_s2) + static_cast<int>(row_jd) +
             static_cast<int>(row_jgt) <= 1);
  int rank;
  if (sh.delta <= 0)
    rank = sh.s + 1;
  else if (row_s2)
    rank = sh.s + 2;
  else if (row_jd)
    rank = sh.s + 1;
  else if (row_jgt)
    rank = sh.r + sh.alpha + 1;
  else
    rank = sh.r + sh.alpha - sh.j;
  RankCertificate cert;
  cert.degree = sh.degree();
  cert.rank = rank;
  cert.method = RankMethod::closed_form_binomial;
  return cert;
}

RankCertificate monomial_rank(int a_exp, int b_exp) {
  if (a_exp < 0 || b_exp < 0 || a_exp + b_exp < 1)
    throw DomainError("monomial_rank needs nonnegative exponents with positive sum");
  RankCertificate cert;
  cert.degree = a_exp + b_exp;
  cert.method = RankMethod::monomial;
  ApolarPair pair;
  if (a_exp == 0 || b_exp == 0) {
    cert.rank = 1;
    // Pure power: the annihilating variable is the degree-1 generator.
    pair.g1 = a_exp == 0 ? BinaryForm::monomial(1, 0, 1, RingRole::dual)
                         : BinaryForm::monomial(0, 1, 1, RingRole::dual);
    pair.g2 = a_exp == 0 ? BinaryForm::monomial(0, cert.degree + 1, 1, RingRole::dual)
                         : BinaryForm::monomial(cert.degree + 1, 0, 1, RingRole::dual);
    cert.g1_square_free = true;
  } else {
    cert.rank = std::max(a_exp, b_exp) + 1;
    // F_perp = (X^(a+1), Y^(b+1)), ordered by degree.
    BinaryForm gx = BinaryForm::monomial(a_exp + 1, 0, 1, RingRole::dual);
    BinaryForm gy = BinaryForm::monomial(0, b_exp + 1, 1, RingRole::dual);
    if (a_exp <= b_exp) {
      pair.g1 = gx;
      pair.g2 = gy;
    } else {
      pair.g1 = gy;
      pair.g2 = gx;
    }
    cert.g1_square_free = false;
  }
  pair.d1 = pair.g1.degree;
  pair.d2 = pair.g2.degree;
  cert.witness = pair;
  return cert;
}

}  // namespace waring
