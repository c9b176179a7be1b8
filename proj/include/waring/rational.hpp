#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include <string>

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// "p/q" or "p"; always lossless.
std::string to_string(const Rational& r);

// Accepts "p", "p/q" and plain decimals like "1.25" (converted exactly).
Rational rational_from_string(const std::string& text);

}  // namespace waring
