#pragma once

#include <gmpxx.h>

#include <algorithm>

#include "waring/rational.hpp"

namespace waring {

using BigFloat = mpf_class;

/// Complex number over GMP floats. Every operation evaluates into a result
/// carrying the larger of the operand precisions.
struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  explicit BigComplex(unsigned long prec) : re(0, prec), im(0, prec) {}
  BigComplex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}
  BigComplex(const Rational& r, unsigned long prec) : re(0, prec), im(0, prec) {
    re = BigFloat(r, prec);
  }

  unsigned long precision() const {
    return std::max(re.get_prec(), im.get_prec());
  }

  BigComplex operator+(const BigComplex& o) const {
    unsigned long p = std::max(precision(), o.precision());
    return {BigFloat(re + o.re, p), BigFloat(im + o.im, p)};
  }
  BigComplex operator-(const BigComplex& o) const {
    unsigned long p = std::max(precision(), o.precision());
    return {BigFloat(re - o.re, p), BigFloat(im - o.im, p)};
  }
  BigComplex operator*(const BigComplex& o) const {
    unsigned long p = std::max(precision(), o.precision());
    return {BigFloat(re * o.re - im * o.im, p), BigFloat(re * o.im + im * o.re, p)};
  }
  BigComplex operator/(const BigComplex& o) const {
    unsigned long p = std::max(precision(), o.precision());
    BigFloat n(o.re * o.re + o.im * o.im, p);
    return {BigFloat((re * o.re + im * o.im) / n, p),
            BigFloat((im * o.re - re * o.im) / n, p)};
  }
  BigComplex operator-() const { return {BigFloat(-re), BigFloat(-im)}; }
  BigComplex conj() const { return {re, BigFloat(-im)}; }

  BigFloat abs2() const {
    return BigFloat(re * re + im * im, precision());
  }
  BigFloat abs() const {
    BigFloat a = abs2();
    return sqrt(a);
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// log2 |x|, from the double mantissa/exponent split. Returns a very
/// negative value for zero.
double log2_abs(const BigFloat& x);

}  // namespace waring
