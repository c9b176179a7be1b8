#pragma once

#include <cstdint>
#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/sylvester.hpp"

namespace waring {

struct WaringTerm {
  BigComplex scale;  // c in c * (a x + b y)^d
  BigComplex a, b;
};

struct WaringDecomposition {
  std::vector<WaringTerm> terms;
  unsigned long precision_bits = 128;
  BigFloat residual;  // max-norm of coeffs(F - sum) / max-norm of coeffs(F)
};

inline constexpr std::uint64_t kDefaultSeed = 0x5741524e47u;  // arbitrary fixed seed
inline constexpr int kPencilBudget = 64;

/// Square-free dual form of degree = rank annihilating F. Uses g1 directly
/// when possible, otherwise searches the pencil g2 + m*g1 with random small
/// integer multipliers m.
BinaryForm squarefree_annihilator(const BinaryForm& f, const RankCertificate& cert,
                                  std::uint64_t seed = kDefaultSeed);

/// The deg(h) distinct points [a:b] where h vanishes, normalized so that
/// max(|a|,|b|) = 1 with the larger entry real positive. The point [1:0]
/// is read off exactly from the vanishing of the top X-coefficient.
std::vector<std::pair<BigComplex, BigComplex>> projective_roots(
    const BinaryForm& h, unsigned long precision_bits);

WaringDecomposition decompose(const BinaryForm& f,
                              unsigned long precision_bits = 128,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace waring
