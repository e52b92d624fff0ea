#include <algorithm>
#include <map>

#include "doctest.h"
#include "heckoid/algebraic.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/field_discriminant.hpp"
#include "heckoid/slope_half.hpp"
#include "heckoid/sturm.hpp"
#include "oracles.hpp"

using namespace heckoid;

namespace {

const std::vector<SlopeHalfRow>& golden() {
  static const auto rows = oracle::golden_rows();
  return rows;
}

const std::vector<SlopeHalfRow>& full_run() {
  static const auto rows = enumerate_slope_half();
  return rows;
}

std::vector<std::string> keys(const std::vector<SlopeHalfRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    out.push_back(r.symbol.str() + " " + r.field_disc.get_str() + " " + r.min_poly.str());
  return out;
}

}  // namespace

TEST_CASE("golden file shape") {
  REQUIRE(golden().size() == 55);
  for (size_t i = 0; i < golden().size(); ++i) CHECK(golden()[i].index == static_cast<int>(i) + 1);
}

TEST_CASE("gamma_of_n") {
  CHECK(gamma_of_n(2).rational_value() == -2);
  CHECK(gamma_of_n(3).rational_value() == -3);
  CHECK(gamma_of_n(6).min_poly() == IntPoly{1, 4, 1});
  CHECK(std::abs(gamma_of_n(6).approx().real() - (-2 - std::sqrt(3.0L))) < 1e-15L);
  CHECK_THROWS_AS(gamma_of_n(1), std::invalid_argument);
}

TEST_CASE("alpha anchors") {
  auto a = alpha(3, 6, 2);
  CHECK(a.min_poly() == IntPoly{15, 0, 1});
  CHECK(a.approx().imag() > 0);
  CHECK(alpha(4, 6, 2).min_poly() == IntPoly{36, 0, 1});
  CHECK(std::abs(alpha(4, 6, 2).approx() - std::complex<long double>(0, 6)) < 1e-15L);
  CHECK(alpha(3, 3, 5).min_poly() == IntPoly{-19, 0, 2, 0, 1});
  CHECK(alpha(3, 5, 2).min_poly() == IntPoly{-11, 0, 9, 0, 1});
  // α² = -1 - 2√5 at (3,3,5).
  CHECK(alpha_sq_min_poly(3, 3, 5) == IntPoly{-19, 2, 1});
}

TEST_CASE("hyperfinite vertex") {
  CHECK(hyperfinite_vertex_check(3, 6, 2));
  CHECK_FALSE(hyperfinite_vertex_check(3, 4, 2));
  CHECK(hyperfinite_vertex_check(3, 3, 4));
  CHECK_FALSE(hyperfinite_vertex_check(3, 3, 3));
}

TEST_CASE("galois positivity filter examples") {
  CHECK(galois_positivity_filter(3, 3, 5));
  CHECK_FALSE(galois_positivity_filter(3, 7, 2));
  CHECK(galois_positivity_filter(3, 5, 2));
  CHECK_THROWS_AS(galois_positivity_filter(2, 5, 2), std::invalid_argument);
}

TEST_CASE("filter agrees with the embedding oracle for orders up to 14") {
  int disagreements = 0;
  for (int p = 3; p <= 14; ++p)
    for (int q = p; q <= 14; ++q)
      for (int n = 2; n <= 14; ++n)
        if (galois_positivity_filter(p, q, n) != (oracle::negative_alpha_sq_conjugates(p, q, n) == 1)) {
          ++disagreements;
          MESSAGE("filter disagrees at (" << p << "," << q << "," << n << ")");
        }
  CHECK(disagreements == 0);
}

TEST_CASE("filter passes imply one complex place of Q(alpha)") {
  for (int p = 3; p <= 12; ++p)
    for (int q = p; q <= 12; ++q)
      for (int n = 2; n <= 12; ++n) {
        if (!galois_positivity_filter(p, q, n)) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        CHECK(signature(alpha(p, q, n).min_poly()).complex_places == 1);
      }
}

TEST_CASE("alpha squared is symmetric in p and q") {
  for (auto [p, q, n] : {std::tuple{3, 5, 2}, {4, 9, 3}, {5, 8, 7}, {3, 12, 12}})
    CHECK(alpha_sq_min_poly(p, q, n) == alpha_sq_min_poly(q, p, n));
}

TEST_CASE("small bounds") {
  SlopeHalfOptions o;
  o.p_max = o.q_max = 3;
  o.n_max = 2;
  CHECK(enumerate_slope_half(o).empty());
  o.p_max = 2;
  CHECK_THROWS_AS(enumerate_slope_half(o), std::invalid_argument);
  o.p_max = 3;
  o.n_max = 1;
  CHECK_THROWS_AS(enumerate_slope_half(o), std::invalid_argument);
}

TEST_CASE("n at most 3 gives the first 17 golden rows") {
  SlopeHalfOptions o;
  o.n_max = 3;
  auto rows = enumerate_slope_half(o);
  REQUIRE(rows.size() == 17);
  std::vector<SlopeHalfRow> want(golden().begin(), golden().begin() + 17);
  CHECK(keys(rows) == keys(want));
  for (size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].index == want[i].index);
}

TEST_CASE("orders up to 6 and n up to 3 give the filtered golden rows") {
  SlopeHalfOptions o;
  o.p_max = o.q_max = 6;
  o.n_max = 3;
  auto rows = enumerate_slope_half(o);
  std::vector<SlopeHalfRow> want;
  for (const auto& r : golden())
    if (r.symbol.q <= 6 && r.symbol.n <= 3) want.push_back(r);
  REQUIRE(want.size() == 11);
  CHECK(keys(rows) == keys(want));
  for (size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].index == static_cast<int>(i) + 1);
}

TEST_CASE("row invariants of the full run") {
  const auto& rows = full_run();
  int top_degree = 0;
  for (const auto& r : rows) {
    CAPTURE(r.symbol.str());
    const IntPoly& m = r.min_poly;
    CHECK(m.is_monic());
    CHECK(m.is_even());
    CHECK(is_irreducible(m));
    CHECK(sturm_real_roots(m) == m.degree() - 2);
    CHECK(m.degree() <= 8);
    CHECK(r.field_disc < 0);
    CHECK(r.symbol.p <= r.symbol.q);
    CHECK(r.symbol.slope == Slope(1, 2));
    CHECK(hyperfinite_vertex_check(r.symbol.p, r.symbol.q, r.symbol.n));
    top_degree = std::max(top_degree, m.degree());
  }
  CHECK(top_degree == 8);
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const SlopeHalfRow& a, const SlopeHalfRow& b) {
    return std::tie(a.symbol.n, a.symbol.p, a.symbol.q) < std::tie(b.symbol.n, b.symbol.p, b.symbol.q);
  }));
}

TEST_CASE("every golden row is reproduced") {
  std::map<std::string, const SlopeHalfRow*> got;
  for (const auto& r : full_run()) got[r.symbol.str()] = &r;
  for (const auto& g : golden()) {
    CAPTURE(g.symbol.str());
    auto it = got.find(g.symbol.str());
    REQUIRE(it != got.end());
    CHECK(it->second->min_poly == g.min_poly);
    CHECK(it->second->field_disc == g.field_disc);
  }
}

TEST_CASE("golden rows against independent recomputation") {
  for (const auto& g : golden()) {
    CAPTURE(g.symbol.str());
    const auto [p, q, n] = std::tuple{g.symbol.p, g.symbol.q, g.symbol.n};
    CHECK(oracle::negative_alpha_sq_conjugates(p, q, n) == 1);
    CHECK(field_discriminant(g.min_poly).value == g.field_disc);
    CHECK(signature(g.min_poly).complex_places == 1);
  }
}

TEST_CASE("relator consistency") {
  const auto& g = golden();
  CHECK(relator_consistency(g[1]));
  CHECK(relator_consistency(g[25]));
  SlopeHalfRow bad = g[25];
  bad.symbol.n += 1;
  CHECK_FALSE(relator_consistency(bad));
  SlopeHalfRow wrong_poly = g[1];
  wrong_poly.min_poly = IntPoly{16, 0, 1};
  CHECK_FALSE(relator_consistency(wrong_poly));
}

TEST_CASE("takeuchi arithmetic triangle groups") {
  CHECK(takeuchi_arithmetic(2, 3, 7));
  CHECK(takeuchi_arithmetic(2, 3, kParabolic));
  CHECK(takeuchi_arithmetic(kParabolic, kParabolic, kParabolic));
  CHECK(takeuchi_arithmetic(2, 3, 11));
  CHECK_FALSE(takeuchi_arithmetic(2, 3, 13));
  CHECK_FALSE(takeuchi_arithmetic(2, 3, 15));
  CHECK(takeuchi_arithmetic(2, 5, 30));
  CHECK_THROWS_AS(takeuchi_arithmetic(2, 3, 6), std::invalid_argument);
  // Orders past 30 never occur in the classification.
  std::vector<Order> orders;
  for (Order o = 2; o <= 31; ++o) orders.push_back(o);
  orders.push_back(kParabolic);
  auto finite_sum = [](Order a, Order b, Order c) {
    double s = 0;
    for (Order x : {a, b, c}) s += x == kParabolic ? 0.0 : 1.0 / x;
    return s;
  };
  int count = 0, cocompact = 0;
  for (size_t i = 0; i < orders.size(); ++i)
    for (size_t j = i; j < orders.size(); ++j)
      for (size_t k = j; k < orders.size(); ++k) {
        const Order a = orders[i], b = orders[j], c = orders[k];
        if (finite_sum(a, b, c) >= 1 - 1e-12) continue;
        if (!takeuchi_arithmetic(a, b, c)) continue;
        ++count;
        if (a != kParabolic && b != kParabolic && c != kParabolic) ++cocompact;
      }
  CHECK(count == 85);
  CHECK(cocompact == 76);
}

TEST_CASE("takeuchi option only removes rows") {
  SlopeHalfOptions o;
  o.n_max = 6;
  o.takeuchi = true;
  auto strict = enumerate_slope_half(o);
  o.takeuchi = false;
  auto loose = enumerate_slope_half(o);
  CHECK(strict.size() <= loose.size());
  auto all = keys(loose);
  for (const auto& k : keys(strict)) CHECK(std::find(all.begin(), all.end(), k) != all.end());
}
