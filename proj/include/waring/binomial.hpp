#pragma once

#include "waring/binary_form.hpp"
#include "waring/sylvester.hpp"

namespace waring {

/// Normalized binomial x^r y^s (a y^alpha + b x^alpha) with r <= s,
/// i.e. F = a x^r y^(s+alpha) + b x^(r+alpha) y^s.
struct BinomialShape {
  int r = 0, s = 0;
  int alpha = 1;
  Rational a, b;
  bool swapped = false;  // x <-> y applied to enforce r <= s
  int delta = 0;         // r + alpha - s
  int q = 0, j = 0;      // r = q*alpha + j, 0 <= j < alpha

  int degree() const { return r + s + alpha; }
};

BinomialShape make_shape(int r, int s, int alpha, const Rational& a,
                         const Rational& b, bool swapped = false);

/// Requires exactly two nonzero coefficients.
BinomialShape normalize_binomial(const BinaryForm& f);

/// Inverse of normalize_binomial (undoes the swap).
BinaryForm expand_binomial(const BinomialShape& shape);

/// Closed-form rank table; independent of the coefficients a, b.
RankCertificate binomial_rank(const BinomialShape& shape);

/// Rank of x^a_exp y^b_exp: 1 for a pure power, else max + 1.
RankCertificate monomial_rank(int a_exp, int b_exp);

}  // namespace waring
