#pragma once

#include <utility>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/linalg.hpp"

namespace waring {

/// Generators of the apolar ideal of a form of degree d.
/// Always d1 <= d2 and d1 + d2 = d + 2.
struct ApolarPair {
  BinaryForm g1, g2;
  int d1 = 0, d2 = 0;
};

struct HilbertFunctionTable {
  int degree = 0;
  std::vector<int> values;  // values[i] = HF(i), i = 0..degree
};

/// Matrix of g |-> g o F on dual degree i: (d-i+1) x (i+1), column j holds
/// the coefficients of X^j Y^(i-j) o F. Requires 0 <= i <= deg F.
RationalMatrix catalecticant(const BinaryForm& f, int i);

/// Kernel of the apolar pairing at dual degree i; unlike catalecticant this
/// also accepts i = d+1, where the whole space annihilates.
std::vector<RationalVector> apolar_kernel(const BinaryForm& f, int i);

HilbertFunctionTable hilbert_function(const BinaryForm& f);

/// Smallest degree with a nonzero annihilator, plus a canonical kernel
/// vector there (primitive integer, positive highest-X coefficient).
std::pair<int, BinaryForm> min_apolar_form(const BinaryForm& f);

ApolarPair apolar_generators(const BinaryForm& f);

}  // namespace waring
