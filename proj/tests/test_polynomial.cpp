#include "doctest.h"
#include "heckoid/factor.hpp"
#include "heckoid/polynomial.hpp"
#include "heckoid/resultant.hpp"
#include "heckoid/roots.hpp"
#include "heckoid/sturm.hpp"

using namespace heckoid;

TEST_CASE("resultant convention on linear factors") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(resultant(IntPoly{-a, 1}, IntPoly{-b, 1}) == a - b);
}

TEST_CASE("polynomial discriminants") {
  CHECK(poly_discriminant(IntPoly{15, 0, 1}) == -60);
  CHECK(poly_discriminant(IntPoly{36, 0, 1}) == -144);
  // z⁴ + bz² + c has discriminant 16c(b² - 4c)².
  CHECK(poly_discriminant(IntPoly{-11, 0, 9, 0, 1}) == -2750000);
  CHECK(poly_discriminant(IntPoly{1, 1, 1}) == -3);
}

TEST_CASE("sturm counts") {
  CHECK(sturm_real_roots(IntPoly{15, 0, 1}) == 0);
  CHECK(sturm_real_roots(IntPoly{-11, 0, 9, 0, 1}) == 2);
  CHECK(sturm_real_roots(IntPoly{-1, 1}, mpq_class(0), mpq_class(2)) == 1);
}

TEST_CASE("factor") {
  IntPoly p = IntPoly{-1, 0, 1} * IntPoly{15, 0, 1} * IntPoly{-11, 0, 9, 0, 1};
  auto f = factor(p);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0].poly == IntPoly{-1, 1});
  CHECK(f.factors[3].poly == IntPoly{-11, 0, 9, 0, 1});
  CHECK(is_irreducible(IntPoly{-19, 0, 2, 0, 1}));
  CHECK(!is_irreducible(IntPoly{4, 0, 0, 0, 1}));
  auto r = isolate_roots(IntPoly{-11, 0, 9, 0, 1});
  CHECK(r.size() == 4);
}
