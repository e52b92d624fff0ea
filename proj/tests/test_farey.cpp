#include <cmath>
#include <random>

#include "doctest.h"
#include "heckoid/cyclotomic.hpp"
#include "heckoid/farey.hpp"

using namespace heckoid;

namespace {

CInterval point(mpfr_prec_t prec, double re, double im) {
  return {Interval::from_double(prec, re), Interval::from_double(prec, im)};
}

bool close(const CInterval& a, std::complex<double> b, double tol = 1e-12) {
  return std::abs(a.to_complex() - b) < tol;
}

}  // namespace

TEST_CASE("farey words") {
  CHECK(word_str(farey_word(Slope(1, 2))) == "a b^-1 a^-1 b");
  CHECK(word_str(farey_word(Slope(0, 1))) == "a b");
  CHECK(word_str(farey_word(Slope(1, 1))) == "a^-1 b");
  for (const auto& s : enumerate_slopes(30)) {
    auto w = farey_word(s);
    REQUIRE(w.size() == static_cast<size_t>(2 * s.s));
    for (size_t i = 0; i < w.size(); ++i) CHECK(w[i].gen == (i % 2 == 0 ? 'a' : 'b'));
  }
  CHECK_THROWS_AS(Slope(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Slope(3, 2), std::invalid_argument);
  CHECK(Slope::parse("3/7") == Slope(3, 7));
  CHECK_THROWS_AS(Slope::parse("3/x"), std::invalid_argument);
}

TEST_CASE("generator matrices") {
  auto m = generator_matrices(3, 3, CInterval(128, mpz_class(-3)));
  CHECK(close(m.f.trace(), {1, 0}));
  CHECK(close(m.g.trace(), {1, 0}));
  auto comm = m.f * m.g * m.f.inverse() * m.g.inverse();
  CHECK(close(comm.trace(), {-1, 0}));
  for (Order p : {3, 5, 7, kParabolic}) {
    auto z = generator_matrices(p, 4, CInterval(128));
    CHECK(close(word_trace(farey_word(Slope(1, 2)), z), {2, 0}));
  }
  auto par = parabolic_matrices(CInterval(128, mpz_class(1)));
  CHECK(close(word_trace(farey_word(Slope(1, 2)), par), {3, 0}));  // γ = ρ² = 1
}

TEST_CASE("farey trace examples") {
  // tr(fg) = 2cos(2π/3) + μ with μ = (3 + i√3)/2.
  CHECK(close(farey_trace(Slope(0, 1), 3, 3, CInterval(128, mpz_class(-3))),
              {0.5, std::sqrt(3.0) / 2}));
  const double c5 = std::cos(M_PI / 5);
  CHECK(close(farey_trace(Slope(1, 2), 3, 3, point(128, -2 - 2 * c5, 0)), {-2 * c5, 0}));
}

TEST_CASE("commutator trace is gamma + 2 at every precision") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  const Order orders[] = {2, 3, 4, 5, 7, 12, 30, kParabolic};
  for (int t = 0; t < 100; ++t) {
    const double re = u(rng), im = u(rng);
    const Order p = orders[rng() % 8], q = orders[rng() % 8];
    for (mpfr_prec_t prec : {128, 256, 512}) {
      auto g = point(prec, re, im);
      auto tr = farey_trace(Slope(1, 2), p, q, g);
      auto d = tr - g - CInterval(prec, mpz_class(2));
      CHECK(d.contains_zero());
      CHECK(tr.re.width().to_double() < std::ldexp(1.0, -static_cast<int>(prec) + 20));
    }
  }
}

TEST_CASE("farey trace is conjugation invariant") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 30; ++t) {
    const mpfr_prec_t prec = 256;
    auto m = generator_matrices(3 + t % 5, 4 + t % 3, point(prec, u(rng), u(rng)));
    // Random matrix of determinant one: [[x, y], [z, (1 + yz)/x]].
    CInterval x = point(prec, 1 + std::fabs(u(rng)), u(rng)), y = point(prec, u(rng), u(rng)),
              z = point(prec, u(rng), u(rng));
    CInterval one(prec, mpz_class(1));
    Mat2 c{x, y, z, (one + y * z) / x};
    GeneratorPair conj{c * m.f * c.inverse(), c * m.g * c.inverse()};
    for (const auto& s : enumerate_slopes(7)) {
      auto a = word_trace(farey_word(s), m), b = word_trace(farey_word(s), conj);
      CHECK(a.intersects(b));
      CHECK(std::abs(a.to_complex() - b.to_complex()) < 1e-40);
    }
  }
}

TEST_CASE("slope enumeration") {
  auto two = enumerate_slopes(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Slope(0, 1));
  CHECK(two[1] == Slope(1, 1));
  CHECK(two[2] == Slope(1, 2));
  auto three = enumerate_slopes(3);
  REQUIRE(three.size() == 5);
  CHECK(three[3] == Slope(1, 3));
  CHECK(three[4] == Slope(2, 3));
  long total = 1;
  for (long n = 1; n <= 100; ++n) {
    total += euler_phi(n);
    if (n % 9 == 0 || n == 100) CHECK(static_cast<long>(enumerate_slopes(n).size()) == total);
  }
  const double expect = 3.0 * 100 * 100 / (M_PI * M_PI);
  CHECK(std::fabs(static_cast<double>(total) - expect) / expect < 0.05);
  auto all = enumerate_slopes(40);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}

TEST_CASE("relator search examples") {
  RelatorOptions opt;
  opt.max_denominator = 12;
  auto res = relator_search(3, 6, AlgebraicNumber(mpq_class(-2)), opt);
  bool found = false;
  for (const auto& h : res.hits) {
    CHECK(h.certified);
    if (h.slope == Slope(1, 2)) {
      found = true;
      CHECK(h.n == 2);
      CHECK(h.k == 1);
      CHECK(h.trace_value == doctest::Approx(0).epsilon(1e-12));
    }
  }
  CHECK(found);

  // γ = -2 - 2cos(π/4).
  auto g4 = AlgebraicNumber(IntPoly{2, 4, 1}, CInterval(Interval::from_double(128, -3.41421)
                                                          .inflate(Float(128, 1e-3))));
  auto r4 = relator_search(3, 3, g4, opt);
  REQUIRE_FALSE(r4.hits.empty());
  bool half = false;
  for (const auto& h : r4.hits)
    if (h.slope == Slope(1, 2)) {
      half = true;
      CHECK(h.n == 4);
      CHECK(h.k == -1);
    }
  CHECK(half);
  CHECK(hit_json(3, 3, r4.hits.front()).find("\"certified\":true") != std::string::npos);

  // γ + 2 = 5/2 at slope 1/2: outside [-2,2].
  opt.max_denominator = 2;
  auto none = relator_search(3, 3, AlgebraicNumber(mpq_class(1, 2)), opt);
  for (const auto& h : none.hits) CHECK_FALSE(h.slope == Slope(1, 2));
}

TEST_CASE("certification rejects wrong orders and reports near misses") {
  auto g5 = AlgebraicNumber(IntPoly{5, 5, 1},
                            CInterval(Interval::from_double(128, -3.618).inflate(Float(128, 1e-2))));
  // γ + 2 = -2cos(π/5).
  CHECK(certify_trace(3, 3, g5, Slope(1, 2), 5, -1) == Verdict::Pass);
  CHECK(certify_trace(3, 3, g5, Slope(1, 2), 6, -1) == Verdict::Fail);
  CHECK(certify_trace(3, 3, g5, Slope(1, 2), 5, 1) == Verdict::Fail);

  RelatorOptions opt;
  opt.max_denominator = 2;
  auto near = relator_search(3, 3, AlgebraicNumber(mpq_class(-2) + mpq_class(1, 1000000000000L)), opt);
  bool seen = false;
  for (const auto& h : near.near_misses)
    if (h.slope == Slope(1, 2) && h.n == 2) {
      seen = true;
      CHECK(h.note == "nonzero");
      CHECK_FALSE(h.certified);
    }
  CHECK(seen);
}

TEST_CASE("certified hits survive precision doubling") {
  RelatorOptions lo, hi;
  lo.max_denominator = hi.max_denominator = 10;
  hi.policy = PrecisionPolicy{256, 4096};
  auto g = AlgebraicNumber(mpq_class(-3));
  auto a = relator_search(3, 4, g, lo), b = relator_search(3, 4, g, hi);
  REQUIRE(a.hits.size() == b.hits.size());
  for (size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].slope == b.hits[i].slope);
    CHECK(a.hits[i].n == b.hits[i].n);
    CHECK(a.hits[i].k == b.hits[i].k);
  }
}

TEST_CASE("parabolic relator search") {
  // ρ = i√2: γ = -2 and the commutator has trace 0.
  auto rho = AlgebraicNumber(IntPoly{2, 0, 1},
                             CInterval(Interval(128), Interval::from_double(128, 1.41421).inflate(Float(128, 1e-3))));
  RelatorOptions opt;
  opt.max_denominator = 6;
  auto res = relator_search_parabolic(rho, opt);
  bool half = false;
  for (const auto& h : res.hits)
    if (h.slope == Slope(1, 2)) half = h.n == 2;
  CHECK(half);
  CHECK(hit_json(kParabolic, kParabolic, res.hits.front()).rfind("{\"p\":\"inf\",\"q\":\"inf\"", 0) == 0);
}
