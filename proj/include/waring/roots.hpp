#pragma once

#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/binary_form.hpp"

namespace waring {

/// All complex roots of a square-free univariate polynomial with rational
/// coefficients, by simultaneous Aberth--Ehrlich iteration followed by
/// Newton polishing, at the given working precision.
std::vector<BigComplex> univariate_roots(const RationalVector& poly,
                                         unsigned long precision_bits);

/// Evaluate p at z (Horner) with rational coefficients lifted to floats.
BigComplex poly_eval(const RationalVector& poly, const BigComplex& z,
                     unsigned long precision_bits);

}  // namespace waring
