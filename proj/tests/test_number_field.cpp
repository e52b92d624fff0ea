#include <random>

#include "doctest.h"
#include "heckoid/lll.hpp"
#include "heckoid/number_field.hpp"

using namespace heckoid;

namespace {

AlgebraicNumber sqrt_of(long v) {
  if (v >= 0) return AlgebraicNumber(IntPoly{-v, 0, 1}, CInterval(Interval(128, mpz_class(v)).sqrt()));
  return AlgebraicNumber(IntPoly{-v, 0, 1},
                         CInterval(Interval(128), Interval(128, mpz_class(-v)).sqrt()));
}

}  // namespace

TEST_CASE("lll finds a planted short vector") {
  IntMatrix b{{1, 0, 0, 1000003}, {0, 1, 0, 2000005}, {0, 0, 1, 3000010}};
  lll_reduce(b);
  // 2 e0 - e1 has last coordinate 1
  mpz_class n0 = 0;
  for (auto& v : b[0]) n0 += v * v;
  CHECK(n0 <= 6);
}

TEST_CASE("field arithmetic") {
  NumberField k(sqrt_of(-15));
  RatPoly y{0, 1};
  CHECK(k.mul(y, y) == RatPoly{-15});
  CHECK(k.mul(k.inv(RatPoly{1, 1}), RatPoly{1, 1}) == RatPoly{1});
  CHECK(k.charpoly(y) == RatPoly{15, 0, 1});
  CHECK(k.minpoly(RatPoly{3}) == IntPoly{-3, 1});
  CHECK(k.minpoly(RatPoly{1, 2}) == IntPoly{61, -2, 1});
}

TEST_CASE("membership") {
  auto g = AlgebraicNumber::from_root_index(IntPoly{-11, 0, 9, 0, 1}, 3);
  auto rational = membership(AlgebraicNumber(mpq_class(-1, 2)), g);
  REQUIRE(rational);
  CHECK(*rational == RatPoly::constant(mpq_class(-1, 2)));

  auto s5 = membership(sqrt_of(5), g);
  REQUIRE(s5);
  NumberField k(g);
  CHECK(k.mul(*s5, *s5) == RatPoly{5});

  CHECK_FALSE(membership(sqrt_of(2), sqrt_of(-15)));
  CHECK_FALSE(membership(sqrt_of(5), sqrt_of(-15)));
  CHECK(membership(sqrt_of(-15), sqrt_of(-15)));
}

TEST_CASE("square roots in fields") {
  auto g = AlgebraicNumber::from_root_index(IntPoly{-11, 0, 9, 0, 1}, 3);
  auto two = is_square_in_field(AlgebraicNumber(mpq_class(4)), g);
  REQUIRE(two);
  CHECK(two->rational_value() == 2);
  auto r5 = is_square_in_field(AlgebraicNumber(mpq_class(5)), g);
  REQUIRE(r5);
  CHECK(r5->min_poly() == IntPoly{-5, 0, 1});
  CHECK_FALSE(is_square_in_field(AlgebraicNumber(mpq_class(2)), sqrt_of(-15)));
  CHECK_THROWS_AS(is_square_in_field(sqrt_of(2), sqrt_of(-15)), std::invalid_argument);
}

TEST_CASE("square roots agree with brute-force linear algebra") {
  // For random s in Q(γ), s² is a square; s² + 1 for totally real γ never is.
  auto g = AlgebraicNumber::from_root_index(IntPoly{-11, 0, 9, 0, 1}, 3);
  NumberField k(g);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int t = 0; t < 20; ++t) {
    RatPoly s{c(rng), c(rng), c(rng), c(rng)};
    if (s.is_zero()) continue;
    auto d = k.mul(s, s);
    auto r = k.sqrt(d);
    REQUIRE(r);
    CHECK((*r == s || *r == -s));
  }
}
