#include "waring/realrank.hpp"

#include <vector>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Primitive integer coefficients with the SIGN KEPT (Sturm needs it).
RationalVector primitive_signed(const RationalVector& p0) {
  int d = poly_degree(p0);
  if (d < 0) return RationalVector::Zero(1);
  RationalVector p = p0.head(d + 1);
  Integer l = 1;
  for (int i = 0; i <= d; ++i) l = lcm(l, p[i].get_den());
  Integer c = 0;
  for (int i = 0; i <= d; ++i)
    c = gcd(c, Integer(p[i].get_num() * (l / p[i].get_den())));
  Rational scale(l, c);
  for (int i = 0; i <= d; ++i) {
    p[i] *= scale;
    p[i].canonicalize();
  }
  return p;
}

RationalVector neg_rem(const RationalVector& p, const RationalVector& q) {
  RationalVector r = p;
  int dq = poly_degree(q);
  int dr = poly_degree(r);
  while (dr >= dq && dr >= 0) {
    Rational c = r[dr] / q[dq];
    for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= c * q[i];
    r[dr] = 0;
    dr = poly_degree(r);
  }
  for (int i = 0; i < r.size(); ++i) r[i] = -r[i];
  return primitive_signed(r);
}

int sign_at_infinity(const RationalVector& p, bool positive) {
  int d = poly_degree(p);
  if (d < 0) return 0;
  int s = p[d] > 0 ? 1 : -1;
  if (!positive && d % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<RationalVector>& chain, bool positive) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const RationalVector& p0) {
  if (poly_degree(p0) < 0) throw DomainError("count_real_roots: zero polynomial");
  RationalVector p = poly_square_free_part(p0);
  if (poly_degree(p) < 1) return 0;
  std::vector<RationalVector> chain;
  chain.push_back(primitive_signed(p));
  chain.push_back(primitive_signed(poly_derivative(p)));
  while (poly_degree(chain.back()) > 0) {
    RationalVector r = neg_rem(chain[chain.size() - 2], chain.back());
    if (poly_degree(r) < 0) break;
    chain.push_back(std::move(r));
  }
  return variations(chain, false) - variations(chain, true);
}

bool splits_over_reals(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  RationalVector p = dehomogenize(f);
  int dp = poly_degree(p);
  if (dp <= 0) return true;  // pure power of y
  RationalVector sf = poly_square_free_part(p);
  return count_real_roots(sf) == poly_degree(sf);
}

RealRankReport real_rank(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  if (f.degree < 1) throw DegreeError("real_rank needs degree >= 1");
  RealRankReport rep;
  const int d = f.degree;
  // d-th powers of real linear forms first: the degree-1 annihilator of a
  // rational form is rational, so HF(1) = 1 is the whole test.
  bool dth_power = d == 1 || matrix_rank(catalecticant(f, 1)) == 1;
  if (dth_power) {
    rep.kind = RealRankKind::exact;
    rep.reason = RealRankReason::dth_power;
    rep.value = 1;
    return rep;
  }
  if (d <= 2) {
    rep.kind = RealRankKind::exact;
    rep.reason = RealRankReason::trivial_degree;
    rep.value = waring_rank(f).rank;
    return rep;
  }
  if (splits_over_reals(f)) {
    rep.kind = RealRankKind::exact;
    rep.reason = RealRankReason::splits_over_R;
    rep.value = d;
    return rep;
  }
  rep.kind = RealRankKind::bounds;
  rep.reason = RealRankReason::bounds_only;
  rep.lower = waring_rank(f).rank;
  rep.upper = d;
  return rep;
}

RealBinomialClass real_binomial_class(const BinomialShape& sh) {
  RealBinomialClass cls;
  cls.r = sh.r;
  cls.s = sh.s;
  cls.alpha = sh.alpha;
  if (sh.alpha % 2 == 1)
    cls.kind = RealBinomialClassKind::odd_alpha;
  else
    cls.kind = sh.a * sh.b > 0 ? RealBinomialClassKind::plus
                               : RealBinomialClassKind::minus;
  return cls;
}

}  // namespace waring
