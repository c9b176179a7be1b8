#pragma once

#include <Eigen/Dense>

#include "waring/rational.hpp"

namespace waring {

enum class RingRole { primal, dual };

/// Dense homogeneous form in two variables with exact rational coefficients.
/// coeffs[i] is the coefficient of x^i y^(d-i) (primal) or X^i Y^(d-i) (dual).
struct BinaryForm {
  int degree = 0;
  RationalVector coeffs;
  RingRole role = RingRole::primal;

  BinaryForm() : coeffs(RationalVector::Zero(1)) {}
  BinaryForm(int d, RationalVector c, RingRole r = RingRole::primal);

  static BinaryForm zero(int d, RingRole role = RingRole::primal);
  // c * x^xe * y^ye (or X/Y in the dual ring).
  static BinaryForm monomial(int xe, int ye, const Rational& c = 1,
                             RingRole role = RingRole::primal);

  bool is_zero() const;
  BinaryForm with_role(RingRole r) const;
  // The form with x and y exchanged.
  BinaryForm swapped_vars() const;

  bool operator==(const BinaryForm& o) const;
};

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator*(const Rational& c, const BinaryForm& f);
// Product of forms in the same ring.
BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);

struct CoordinateChange {
  // (x, y) |-> (m00 x + m01 y, m10 x + m11 y)
  Rational m00, m01, m10, m11;
  Rational det() const { return m00 * m11 - m01 * m10; }
  CoordinateChange inverse() const;
  static CoordinateChange identity() { return {1, 0, 0, 1}; }
};

// m!/(m-n)! for m >= n >= 0, otherwise 0.
Integer falling_factorial(long m, long n);

// g(d/dx, d/dy) applied to F; g must be dual, F primal, deg g <= deg F.
BinaryForm apolar_apply(const BinaryForm& g, const BinaryForm& f);

// No repeated linear factor over the complex numbers.
bool is_square_free(const BinaryForm& g);

BinaryForm change_coords(const BinaryForm& f, const CoordinateChange& m);

// --- univariate helpers (coefficient i = coefficient of u^i) ---

// Degree of p, or -1 for the zero polynomial.
int poly_degree(const RationalVector& p);
RationalVector poly_derivative(const RationalVector& p);
RationalVector poly_mul(const RationalVector& p, const RationalVector& q);
// Monic gcd; errors when both inputs are zero.
RationalVector poly_gcd(RationalVector p, RationalVector q);
// p divided by gcd(p, p'); same roots, all simple.
RationalVector poly_square_free_part(const RationalVector& p);
// F(u, 1) as a univariate polynomial.
RationalVector dehomogenize(const BinaryForm& f);

}  // namespace waring
