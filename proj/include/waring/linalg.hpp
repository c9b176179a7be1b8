#pragma once

#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Deterministic reduced row echelon form, in place. Pivots are chosen
/// scanning columns left to right and taking the first nonzero row.
/// Returns the pivot column indices.
std::vector<int> rref(RationalMatrix& m);

int matrix_rank(RationalMatrix m);

/// Standard kernel basis read off the RREF: one vector per free column,
/// ordered by ascending free-column index, with a 1 in that column.
std::vector<RationalVector> kernel_basis(RationalMatrix m);

/// Reduce v against an RREF row space; the remainder is the canonical
/// representative of v modulo that row space.
RationalVector reduce_mod_rowspace(RationalVector v, const RationalMatrix& rref_rows,
                                   const std::vector<int>& pivots);

/// Scale to a primitive integer vector whose last nonzero entry is positive.
RationalVector normalize_primitive(RationalVector v);

}  // namespace waring
