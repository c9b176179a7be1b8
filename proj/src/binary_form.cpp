#include "waring/binary_form.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

BinaryForm::BinaryForm(int d, RationalVector c, RingRole r)
    : degree(d), coeffs(std::move(c)), role(r) {
  if (d < 0 || coeffs.size() != d + 1)
    throw std::logic_error("BinaryForm: coefficient vector has wrong length");
}

BinaryForm BinaryForm::zero(int d, RingRole role) {
  return BinaryForm(d, RationalVector::Zero(d + 1), role);
}

BinaryForm BinaryForm::monomial(int xe, int ye, const Rational& c,
                                RingRole role) {
  BinaryForm f = zero(xe + ye, role);
  f.coeffs[xe] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  for (int i = 0; i <= degree; ++i)
    if (coeffs[i] != 0) return false;
  return true;
}

BinaryForm BinaryForm::with_role(RingRole r) const {
  BinaryForm f = *this;
  f.role = r;
  return f;
}

BinaryForm BinaryForm::swapped_vars() const {
  BinaryForm f = zero(degree, role);
  for (int i = 0; i <= degree; ++i) f.coeffs[degree - i] = coeffs[i];
  return f;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  if (degree != o.degree || role != o.role) return false;
  for (int i = 0; i <= degree; ++i)
    if (coeffs[i] != o.coeffs[i]) return false;
  return true;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree != g.degree || f.role != g.role)
    throw DegreeError("cannot add forms of different degree or ring");
  BinaryForm h = f;
  h.coeffs += g.coeffs;
  return h;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree != g.degree || f.role != g.role)
    throw DegreeError("cannot subtract forms of different degree or ring");
  BinaryForm h = f;
  h.coeffs -= g.coeffs;
  return h;
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
  BinaryForm h = f;
  for (int i = 0; i <= h.degree; ++i) h.coeffs[i] *= c;
  return h;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  if (f.role != g.role)
    throw DegreeError("cannot multiply forms from different rings");
  BinaryForm h = BinaryForm::zero(f.degree + g.degree, f.role);
  for (int i = 0; i <= f.degree; ++i) {
    if (f.coeffs[i] == 0) continue;
    for (int j = 0; j <= g.degree; ++j) h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return h;
}

CoordinateChange CoordinateChange::inverse() const {
  Rational d = det();
  if (d == 0) throw SingularMatrixError();
  return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

Integer falling_factorial(long m, long n) {
  if (n < 0 || m < n) return 0;
  Integer p = 1;
  for (long k = 0; k < n; ++k) p *= m - k;
  return p;
}

BinaryForm apolar_apply(const BinaryForm& g, const BinaryForm& f) {
  if (g.role != RingRole::dual || f.role != RingRole::primal)
    throw DegreeError("apolar_apply expects a dual form acting on a primal form");
  const int dp = g.degree, d = f.degree;
  if (dp > d) throw DegreeError("apolar_apply: differential degree exceeds form degree");
  const int dd = d - dp;
  BinaryForm h = BinaryForm::zero(dd, RingRole::primal);
  // X^j Y^(dp-j) applied to x^i y^(d-i) gives (i)_j (d-i)_(dp-j) x^(i-j) y^(d-i-dp+j).
  for (int k = 0; k <= dd; ++k) {
    Rational acc = 0;
    for (int j = 0; j <= dp; ++j) {
      if (g.coeffs[j] == 0 || f.coeffs[k + j] == 0) continue;
      Integer w = falling_factorial(k + j, j) * falling_factorial(d - k - j, dp - j);
      acc += g.coeffs[j] * f.coeffs[k + j] * Rational(w);
    }
    h.coeffs[k] = acc;
  }
  return h;
}

int poly_degree(const RationalVector& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RationalVector poly_derivative(const RationalVector& p) {
  if (p.size() <= 1) return RationalVector::Zero(1);
  RationalVector d(p.size() - 1);
  for (int i = 1; i < p.size(); ++i) d[i - 1] = Rational(i) * p[i];
  return d;
}

RationalVector poly_mul(const RationalVector& p, const RationalVector& q) {
  RationalVector r = RationalVector::Zero(p.size() + q.size() - 1);
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (int j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

namespace {

// Trim to exact degree; zero polynomial becomes the single entry 0.
RationalVector poly_trim(const RationalVector& p) {
  int d = poly_degree(p);
  if (d < 0) return RationalVector::Zero(1);
  return p.head(d + 1);
}

// Integer coefficients, content 1, positive leading coefficient.
RationalVector poly_primitive(const RationalVector& p0) {
  RationalVector p = poly_trim(p0);
  int d = poly_degree(p);
  if (d < 0) return p;
  Integer l = 1;
  for (int i = 0; i <= d; ++i) l = lcm(l, p[i].get_den());
  Integer c = 0;
  for (int i = 0; i <= d; ++i) c = gcd(c, Integer(p[i].get_num() * (l / p[i].get_den())));
  Rational scale(l, c);
  if (p[d] < 0) scale = -scale;
  for (int i = 0; i <= d; ++i) {
    p[i] *= scale;
    p[i].canonicalize();
  }
  return p;
}

RationalVector poly_rem(RationalVector p, const RationalVector& q) {
  int dq = poly_degree(q);
  int dp = poly_degree(p);
  while (dp >= dq && dp >= 0) {
    Rational c = p[dp] / q[dq];
    for (int i = 0; i <= dq; ++i) p[dp - dq + i] -= c * q[i];
    p[dp] = 0;
    dp = poly_degree(p);
  }
  return poly_trim(p);
}

}  // namespace

RationalVector poly_gcd(RationalVector p, RationalVector q) {
  p = poly_primitive(p);
  q = poly_primitive(q);
  if (poly_degree(p) < 0 && poly_degree(q) < 0)
    throw DomainError("gcd of two zero polynomials");
  while (poly_degree(q) >= 0) {
    RationalVector r = poly_primitive(poly_rem(p, q));
    p = q;
    q = r;
  }
  int d = poly_degree(p);
  Rational lead = p[d];
  for (int i = 0; i <= d; ++i) p[i] /= lead;
  return p;
}

RationalVector poly_square_free_part(const RationalVector& p) {
  int d = poly_degree(p);
  if (d <= 0) return poly_trim(p);
  RationalVector g = poly_gcd(p, poly_derivative(p));
  int dg = poly_degree(g);
  if (dg == 0) return poly_trim(p);
  // Exact division p / g.
  RationalVector quot = RationalVector::Zero(d - dg + 1);
  RationalVector rem = poly_trim(p);
  int dr = poly_degree(rem);
  while (dr >= dg) {
    Rational c = rem[dr] / g[dg];
    quot[dr - dg] = c;
    for (int i = 0; i <= dg; ++i) rem[dr - dg + i] -= c * g[i];
    rem[dr] = 0;
    dr = poly_degree(rem);
  }
  return quot;
}

RationalVector dehomogenize(const BinaryForm& f) {
  return poly_trim(f.coeffs);
}

bool is_square_free(const BinaryForm& g) {
  if (g.is_zero()) throw ZeroFormError();
  if (g.degree < 1)
    throw DegreeError("is_square_free needs degree >= 1");
  RationalVector p = dehomogenize(g);
  int dp = poly_degree(p);
  if (g.degree - dp > 1) return false;  // y appears with multiplicity >= 2
  if (dp <= 0) return true;
  RationalVector gg = poly_gcd(p, poly_derivative(p));
  return poly_degree(gg) == 0;
}

BinaryForm change_coords(const BinaryForm& f, const CoordinateChange& m) {
  if (m.det() == 0) throw SingularMatrixError();
  const int d = f.degree;
  // Powers of the two image linear forms, built incrementally.
  BinaryForm lx = BinaryForm::zero(1, f.role);
  lx.coeffs[1] = m.m00;
  lx.coeffs[0] = m.m01;
  BinaryForm ly = BinaryForm::zero(1, f.role);
  ly.coeffs[1] = m.m10;
  ly.coeffs[0] = m.m11;
  std::vector<BinaryForm> px(d + 1), py(d + 1);
  px[0] = py[0] = BinaryForm::monomial(0, 0, 1, f.role);
  for (int i = 1; i <= d; ++i) {
    px[i] = px[i - 1] * lx;
    py[i] = py[i - 1] * ly;
  }
  BinaryForm g = BinaryForm::zero(d, f.role);
  for (int i = 0; i <= d; ++i) {
    if (f.coeffs[i] == 0) continue;
    g = g + f.coeffs[i] * (px[i] * py[d - i]);
  }
  return g;
}

}  // namespace waring
