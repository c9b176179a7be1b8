#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "waring/errors.hpp"
#include "waring/parse.hpp"
#include "waring/sylvester.hpp"

using namespace waring;
using waring::testing::random_change;
using waring::testing::random_form;

TEST_CASE("waring_rank examples") {
  CHECK(waring_rank(parse_form("x^2 + x*y + y^2")).rank == 2);
  CHECK(waring_rank(parse_form("x^2 + 2*x*y + y^2")).rank == 1);

  for (int d = 1; d <= 7; ++d) {
    BinaryForm l = parse_form("x + y");
    BinaryForm f = l;
    for (int k = 1; k < d; ++k) f = f * l;
    CHECK(waring_rank(f).rank == 1);
  }

  RankCertificate c = waring_rank(parse_form("x^2*y^3"));
  CHECK(c.rank == 4);
  CHECK_FALSE(c.g1_square_free);
  REQUIRE(c.witness);
  CHECK(c.witness->g1 == BinaryForm::monomial(3, 0, 1, RingRole::dual));

  CHECK_THROWS_AS(waring_rank(BinaryForm::zero(4)), ZeroFormError);
  CHECK_THROWS_AS(waring_rank(BinaryForm::monomial(0, 0, 5)), DegreeError);
}

TEST_CASE("generic_rank") {
  CHECK(generic_rank(1) == 1);
  CHECK(generic_rank(4) == 3);
  CHECK(generic_rank(9) == 5);
  CHECK_THROWS_AS(generic_rank(0), DegreeError);
}

TEST_CASE("rank is invariant under coordinate changes and scaling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + static_cast<int>(rng() % 14);
    BinaryForm f = random_form(rng, d);
    int rank = waring_rank(f).rank;
    for (int k = 0; k < 5; ++k)
      CHECK(waring_rank(change_coords(f, random_change(rng))).rank == rank);
    CHECK(waring_rank(Rational(-7, 3) * f).rank == rank);
  }
}

TEST_CASE("rank bounds; x*y^(d-1) attains rank d") {
  std::mt19937_64 rng(29);
  for (int d = 2; d <= 12; ++d) {
    BinaryForm f = random_form(rng, d);
    int rank = waring_rank(f).rank;
    CHECK(rank >= 1);
    CHECK(rank <= d);
    CHECK(waring_rank(BinaryForm::monomial(1, d - 1)).rank == d);
  }
}

TEST_CASE("equal generator degrees give a branch-independent rank") {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 10; ++trial) {
    int d = 2 + static_cast<int>(rng() % 13);
    BinaryForm f = random_form(rng, d);
    RankCertificate c = waring_rank(f);
    if (!c.witness || c.witness->d1 != c.witness->d2) continue;
    ++seen;
    // deg g1 = d + 2 - deg g1, so both branches of the algorithm agree.
    CHECK(2 * c.witness->d1 == d + 2);
    CHECK(c.rank == c.witness->d1);
  }
  CHECK(seen > 0);
}
