#include "waring/roots.hpp"

#include <cmath>
#include <cstdlib>

#include "waring/errors.hpp"

namespace waring {

double log2_abs(const BigFloat& x) {
  long exp;
  double m = mpf_get_d_2exp(&exp, x.get_mpf_t());
  if (m == 0.0) return -1e9;
  return std::log2(std::abs(m)) + static_cast<double>(exp);
}

BigComplex poly_eval(const RationalVector& poly, const BigComplex& z,
                     unsigned long prec) {
  BigComplex acc(prec);
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
    acc = acc * z + BigComplex(poly[i], prec);
  return acc;
}

namespace {

BigComplex poly_eval_derivative(const RationalVector& poly, const BigComplex& z,
                                unsigned long prec) {
  BigComplex acc(prec);
  for (int i = static_cast<int>(poly.size()) - 1; i >= 1; --i)
    acc = acc * z + BigComplex(Rational(i) * poly[i], prec);
  return acc;
}

}  // namespace

std::vector<BigComplex> univariate_roots(const RationalVector& poly,
                                         unsigned long prec) {
  const int deg = poly_degree(poly);
  if (deg < 1) return {};
  const unsigned long wp = prec + 64;  // guard bits

  // Cauchy-style radius bound from double approximations.
  double lead = std::abs(poly[deg].get_d());
  double radius = 0.0;
  for (int i = 0; i < deg; ++i)
    radius = std::max(radius, std::abs(poly[i].get_d()) / lead);
  radius = 1.0 + radius;

  // Initial guesses on a circle with an irrational-ish angular offset so no
  // starting point sits on a symmetry axis of the root set.
  std::vector<BigComplex> z(deg, BigComplex(wp));
  for (int i = 0; i < deg; ++i) {
    double theta = 2.0 * M_PI * i / deg + 0.7390851332151607;
    z[i].re = BigFloat(radius * std::cos(theta), wp);
    z[i].im = BigFloat(radius * std::sin(theta), wp);
  }

  const double target = -static_cast<double>(prec) - 8;
  const int max_iter = 400 + static_cast<int>(prec);
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = -1e9;
    for (int i = 0; i < deg; ++i) {
      BigComplex p = poly_eval(poly, z[i], wp);
      BigComplex dp = poly_eval_derivative(poly, z[i], wp);
      if (p.is_zero()) continue;
      BigComplex newton = p / dp;
      BigComplex sum(wp);
      for (int k = 0; k < deg; ++k) {
        if (k == i) continue;
        BigComplex diff = z[i] - z[k];
        sum = sum + BigComplex(Rational(1), wp) / diff;
      }
      BigComplex one(Rational(1), wp);
      BigComplex corr = newton / (one - newton * sum);
      z[i] = z[i] - corr;
      double mag = std::max(log2_abs(corr.re), log2_abs(corr.im));
      double scale = std::max(0.0, std::max(log2_abs(z[i].re), log2_abs(z[i].im)));
      worst = std::max(worst, mag - scale);
    }
    if (worst < target) break;
    if (iter == max_iter - 1)
      throw SearchFailedError("root finder did not converge within iteration budget");
  }

  // Newton polishing at full working precision.
  for (int i = 0; i < deg; ++i) {
    for (int step = 0; step < 4; ++step) {
      BigComplex p = poly_eval(poly, z[i], wp);
      if (p.is_zero()) break;
      BigComplex dp = poly_eval_derivative(poly, z[i], wp);
      if (dp.is_zero()) break;
      z[i] = z[i] - p / dp;
    }
  }
  return z;
}

}  // namespace waring
