#pragma once

#include <optional>
#include <string>

#include "waring/apolarity.hpp"

namespace waring {

enum class RankMethod { sylvester, closed_form_binomial, monomial };

std::string to_string(RankMethod m);

struct RankCertificate {
  int degree = 0;
  int rank = 0;
  RankMethod method = RankMethod::sylvester;
  std::optional<ApolarPair> witness;
  bool g1_square_free = false;
};

/// Sylvester's algorithm: rank = deg g1 when g1 is square-free,
/// otherwise d + 2 - deg g1.
RankCertificate waring_rank(const BinaryForm& f);

/// Rank of a general degree-d form: ceil((d+1)/2).
int generic_rank(int d);

}  // namespace waring
