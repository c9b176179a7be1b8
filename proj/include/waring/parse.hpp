#pragma once

#include <string>

#include "waring/binary_form.hpp"

namespace waring {

/// Parse a homogeneous polynomial in x, y with rational coefficients.
/// Terms are separated by + or -; a term is an optional coefficient
/// (integer, p/q or decimal) and optional x^i / y^j factors, with '*'
/// separators optional. Like monomials are combined; the result must be
/// homogeneous and nonzero.
BinaryForm parse_form(const std::string& text);

/// Lossless text rendering; parse_form(render_form(f)) == f.
std::string render_form(const BinaryForm& f);

}  // namespace waring
