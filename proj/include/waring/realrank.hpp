#pragma once

#include "waring/binomial.hpp"

namespace waring {

enum class RealRankKind { exact, bounds };
enum class RealRankReason { dth_power, splits_over_R, trivial_degree, bounds_only };

struct RealRankReport {
  RealRankKind kind = RealRankKind::bounds;
  RealRankReason reason = RealRankReason::bounds_only;
  int value = 0;       // meaningful when kind == exact
  int lower = 0, upper = 0;  // meaningful when kind == bounds
};

enum class RealBinomialClassKind { odd_alpha, plus, minus };

struct RealBinomialClass {
  RealBinomialClassKind kind = RealBinomialClassKind::odd_alpha;
  int r = 0, s = 0, alpha = 1;  // canonical shape
};

/// Number of distinct real roots, exact, by Sturm sign-variation counting.
int count_real_roots(const RationalVector& p);

/// True iff F is a product of real linear forms.
bool splits_over_reals(const BinaryForm& f);

RealRankReport real_rank(const BinaryForm& f);

RealBinomialClass real_binomial_class(const BinomialShape& shape);

}  // namespace waring
