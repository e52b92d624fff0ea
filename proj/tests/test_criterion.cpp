#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "heckoid/criterion.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/roots.hpp"
#include "heckoid/sturm.hpp"

using namespace heckoid;
using cd = std::complex<double>;

namespace {

AlgebraicNumber root_near(const IntPoly& p, double re, double im) {
  return AlgebraicNumber(p, CInterval(Interval::from_double(128, re).inflate(Float(128, 1e-2)),
                                      Interval::from_double(128, im).inflate(Float(128, 1e-2))));
}

double cosd(int p) { return std::cos(2 * M_PI / p); }

// Brute force: x² - bx + c splits over Q(γ) iff for some choice of signs the
// values (b ± √disc_j)/2 at the embeddings γ_j interpolate a polynomial with
// small-denominator rational coefficients.
bool fricke_oracle(const IntPoly& m, int p, int q) {
  std::vector<cd> g;
  for (const auto& r : isolate_roots(m, 256)) g.push_back(r.box.to_complex());
  const int n = static_cast<int>(g.size());
  const double cp = cosd(p), cq = cosd(q);
  const double b = 4 * (1 + cp) * (1 + cq);
  Eigen::MatrixXcd v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = std::pow(g[static_cast<size_t>(i)], j);
  for (int mask = 0; mask < (1 << n); ++mask) {
    Eigen::VectorXcd rhs(n);
    for (int i = 0; i < n; ++i) {
      const cd c = b * (2 * cp + 2 * cq - g[static_cast<size_t>(i)]);
      cd s = std::sqrt(b * b - 4.0 * c);
      if (mask & (1 << i)) s = -s;
      rhs(i) = s;
    }
    Eigen::VectorXcd h = v.fullPivLu().solve(rhs);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      if (std::abs(h(j).imag()) > 1e-6) ok = false;
      bool rational = false;
      for (int d = 1; d <= 256 && !rational; ++d)
        rational = std::abs(h(j).real() * d - std::round(h(j).real() * d)) < 1e-8;
      ok = ok && rational;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("fricke quadratic examples") {
  auto f = fricke_quadratic(3, 3, AlgebraicNumber(mpq_class(-3)));
  CHECK(f.b == RatPoly{1});
  CHECK(f.c == RatPoly{1});
  auto g = fricke_quadratic(3, 6, AlgebraicNumber(mpq_class(-2)));
  CHECK(g.b == RatPoly{3});
  CHECK(g.c == RatPoly{6});
  auto i = root_near(IntPoly{1, 0, 1}, 0, 1);
  auto h = fricke_quadratic(4, 4, i);
  CHECK(h.b == RatPoly{4});
  CHECK(h.c == RatPoly{0, -4});
  CHECK_THROWS_AS(fricke_quadratic(3, 5, i), std::invalid_argument);
}

TEST_CASE("fricke discriminant is alpha squared on the slope one-half family") {
  // γ = -2 - 2cos(π/n): b² - 4c = α²(p,q,n) for (3,6,2) and (4,6,2).
  NumberField k(AlgebraicNumber(mpq_class(-2)));
  CHECK(k.reduce(fricke_quadratic(k, 3, 6).discriminant()) == RatPoly{-15});
  CHECK(k.reduce(fricke_quadratic(k, 4, 6).discriminant()) == RatPoly{-36});
}

TEST_CASE("embedding bounds") {
  // (3,5): B = 3(5 - √5)/8 or 3(5 + √5)/8 depending on the embedding.
  auto g = root_near(IntPoly{-11, 0, 9, 0, 1}, 0, 3.1766);
  auto checks = embedding_bounds_check(3, 5, g);
  REQUIRE(checks.size() == 2);
  for (const auto& e : checks) {
    const double b = (e.lower_margin - e.tau).to_double();
    const bool near = std::abs(b - 3 * (5 - std::sqrt(5.0)) / 8) < 1e-12 ||
                      std::abs(b - 3 * (5 + std::sqrt(5.0)) / 8) < 1e-12;
    CHECK(near);
  }
  auto third = embedding_bounds_check(3, 3, AlgebraicNumber(mpq_class(-1)));
  REQUIRE(third.size() == 1);
  CHECK((third[0].lower_margin - third[0].tau).to_double() == doctest::Approx(2.25));
  CHECK(third[0].verdict == Verdict::Pass);
  CHECK(embedding_bounds_check(3, 3, AlgebraicNumber(mpq_class(1, 2)))[0].verdict == Verdict::Fail);
  CHECK(embedding_bounds_check(3, 3, AlgebraicNumber(mpq_class(-3)))[0].verdict == Verdict::Fail);
  // Exact boundary -9/4 never passes.
  CHECK(embedding_bounds_check(3, 3, AlgebraicNumber(mpq_class(-9, 4)))[0].verdict != Verdict::Pass);
}

TEST_CASE("check_arithmetic_subgroup examples") {
  auto w = root_near(IntPoly{1, 1, 1}, -0.5, 0.866);
  auto r = check_arithmetic_subgroup({3, 3, w});
  CHECK(r.integrality);
  CHECK(r.field_contains_L);
  CHECK(r.signature_ok);
  CHECK(r.field_signature == Signature{2, 0, 1});
  CHECK(r.embedding_bounds_ok);
  CHECK(r.embeddings.empty());
  CHECK_FALSE(r.fricke_splits);  // 9 + 4ω has norm 61
  CHECK_FALSE(r.all_pass());
  CHECK(r.field_discriminant == -3);

  auto one = check_arithmetic_subgroup({3, 3, AlgebraicNumber(mpq_class(1))});
  CHECK_FALSE(one.embedding_bounds_ok);
  REQUIRE(one.embeddings.size() == 1);
  CHECK(one.embeddings[0].verdict == Verdict::Fail);

  auto half = check_arithmetic_subgroup({3, 3, AlgebraicNumber(mpq_class(1, 2))});
  CHECK_FALSE(half.integrality);

  CHECK_THROWS_AS(check_arithmetic_subgroup({3, 6, AlgebraicNumber(mpq_class(-2))}), RoutingError);
  CHECK_THROWS_AS(check_arithmetic_subgroup({kParabolic, 3, w}), RoutingError);
}

TEST_CASE("parabolic check") {
  auto i2 = root_near(IntPoly{2, 0, 1}, 0, 1.41421356);
  CHECK(parabolic_check(i2).all_pass());
  CHECK_FALSE(parabolic_check(i2, ParabolicField::Gamma).all_pass());
  auto r7 = root_near(IntPoly{2, -1, 1}, 0.5, 1.3228756);
  auto rep = parabolic_check(r7);
  CHECK(rep.all_pass());
  CHECK(rep.field_discriminant == -7);
  CHECK(parabolic_check(r7, ParabolicField::Gamma).all_pass());
  CHECK_FALSE(parabolic_check(AlgebraicNumber(mpq_class(1, 2))).all_pass());
}

TEST_CASE("criterion is symmetric in p and q and stable under precision") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> c(-6, 6);
  const int orders[] = {3, 4, 5, 6, 8, 10, 12};
  int done = 0;
  while (done < 25) {
    const int d = 2 + done % 3;
    std::vector<mpz_class> v(static_cast<size_t>(d) + 1);
    for (auto& x : v) x = c(rng);
    v.back() = 1;
    IntPoly m(v);
    if (m[0] == 0 || !is_irreducible(m) || sturm_real_roots(m) == d) continue;
    auto roots = AlgebraicNumber::roots_of(m);
    AlgebraicNumber g = roots.back();  // largest imaginary part among the last real part
    if (g.is_real()) continue;
    const int p = orders[rng() % 7], q = orders[rng() % 7];
    auto a = check_arithmetic_subgroup({p, q, g});
    auto b = check_arithmetic_subgroup({q, p, g});
    auto hi = check_arithmetic_subgroup({p, q, g}, PrecisionPolicy{512, 4096});
    for (const auto* o : {&b, &hi}) {
      CHECK(a.integrality == o->integrality);
      CHECK(a.field_contains_L == o->field_contains_L);
      CHECK(a.signature_ok == o->signature_ok);
      CHECK(a.embedding_bounds_ok == o->embedding_bounds_ok);
      CHECK(a.fricke_splits == o->fricke_splits);
    }
    ++done;
  }
}

TEST_CASE("fricke splitting agrees with the brute-force oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> c(-5, 5);
  const int orders[] = {3, 4, 6};
  int done = 0, split = 0;
  while (done < 100) {
    const int p = orders[rng() % 3], q = orders[rng() % 3];
    AlgebraicNumber g;
    if (done % 2 == 0) {
      // Random γ of degree ≤ 4.
      const int d = 1 + (done / 2) % 4;
      std::vector<mpz_class> v(static_cast<size_t>(d) + 1);
      for (auto& x : v) x = c(rng);
      v.back() = 1;
      IntPoly m(v);
      if (m[0] == 0 || !is_irreducible(m)) continue;
      g = AlgebraicNumber::roots_of(m).front();
    } else {
      // Planted split: disc = w² for w of degree ≤ 2, γ = (w² - b² + 4bs)/(4b).
      std::vector<mpz_class> v{c(rng), c(rng), 1};
      IntPoly mw(v);
      if (mw[0] == 0 || !is_irreducible(mw)) continue;
      AlgebraicNumber w = AlgebraicNumber::roots_of(mw).front();
      AlgebraicNumber w2 = square(w);
      const mpq_class cp = p == 3 ? mpq_class(-1, 2) : p == 4 ? mpq_class(0) : mpq_class(1, 2);
      const mpq_class cq = q == 3 ? mpq_class(-1, 2) : q == 4 ? mpq_class(0) : mpq_class(1, 2);
      const mpq_class b = 4 * (1 + cp) * (1 + cq);
      const mpq_class k = b * b - 4 * b * (2 * cp + 2 * cq);
      // γ = (w2 - k) / (4b): minimal polynomial m2(4b z + k).
      RatPoly lin(std::vector<mpq_class>{k, 4 * b});
      IntPoly mg = RatPoly(w2.min_poly()).compose(lin).to_primitive_int();
      CInterval box = w2.enclosure(256);
      box -= CInterval(Interval(256, k));
      box *= Interval(256, mpq_class(1) / (4 * b));
      g = AlgebraicNumber(mg, box);
    }
    NumberField kf(g);
    const bool got = kf.sqrt(kf.reduce(fricke_quadratic(kf, p, q).discriminant())).has_value();
    const bool want = fricke_oracle(g.min_poly(), p, q);
    if (got != want) MESSAGE(p, " ", q, " ", g.min_poly().str(), " ", g.str());
    CHECK(got == want);
    split += got;
    ++done;
  }
  CHECK(split >= 50);
}
