// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "heckoid/candidate_search.hpp"
#include "heckoid/field_discriminant.hpp"
#include "heckoid/resultant.hpp"
#include "heckoid/slope_half.hpp"
#include "heckoid/sturm.hpp"
#include "oracles.hpp"

using namespace heckoid;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

const std::vector<SlopeHalfRow>& golden() {
  static const auto rows = oracle::golden_rows();
  return rows;
}

void golden_table(Outcome& o) {
  const auto rows = enumerate_slope_half();
  const auto diff = diff_slope_half(rows, golden());
  for (const auto& l : diff.lines) o.require(false, l);
  if (o.pass) o.detail << rows.size() << " rows equal the golden table";
}

void anchors(Outcome& o) {
  struct Anchor {
    int p, q, n;
    IntPoly poly;
    long disc;
  };
  const Anchor list[] = {{3, 5, 2, IntPoly{-11, 0, 9, 0, 1}, -275},
                         {3, 6, 2, IntPoly{15, 0, 1}, -15},
                         {4, 6, 2, IntPoly{36, 0, 1}, -4},
                         {3, 3, 5, IntPoly{-19, 0, 2, 0, 1}, -475}};
  for (const auto& a : list) {
    const IntPoly m = alpha(a.p, a.q, a.n).min_poly();
    const auto fd = field_discriminant(m);
    std::ostringstream t;
    t << "(" << a.p << "," << a.q << "," << a.n << ") gives " << m.str() << " / " << fd.value.get_str();
    o.require(m == a.poly && fd.value == a.disc && fd.resolved(), t.str());
  }
  if (o.pass) o.detail << "4 anchors exact";
}

void signature_law(Outcome& o) {
  int top = 0;
  for (const auto& r : golden()) {
    const IntPoly& m = r.min_poly;
    o.require(squarefree_part(m).degree() == m.degree() && sturm_real_roots(m) == m.degree() - 2,
              r.symbol.str() + " does not have exactly one complex pair");
    o.require(m.degree() <= 8, r.symbol.str() + " has degree above 8");
    top = std::max(top, m.degree());
  }
  o.require(top == 8, "degree 8 never attained");
  if (o.pass) o.detail << "55 rows with one complex pair, top degree " << top;
}

void discriminant_law(Outcome& o) {
  for (const auto& r : golden()) {
    const mpz_class pd = poly_discriminant(r.min_poly);
    bool ok = r.field_disc != 0 && pd % r.field_disc == 0;
    if (ok) {
      const mpz_class quo = pd / r.field_disc;
      ok = quo > 0 && mpz_perfect_square_p(quo.get_mpz_t());
    }
    o.require(ok, r.symbol.str());
    o.require(field_discriminant(r.min_poly).value == r.field_disc, r.symbol.str() + " recomputed discriminant");
  }
  if (o.pass) o.detail << "55 rows: disc(poly) / field disc is a positive square";
}

void farey_anchor(Outcome& o) {
  std::mt19937 rng(20);
  std::uniform_real_distribution<double> u(-6, 6);
  std::uniform_int_distribution<int> ord(2, 30);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const Order p = ord(rng), q = ord(rng);
    const CInterval g(Interval::from_double(128, u(rng)), Interval::from_double(128, u(rng)));
    const CInterval tr = farey_trace(Slope(1, 2), p, q, g);
    const CInterval d = tr - g - CInterval(128, mpz_class(2));
    const double w = std::max({tr.re.width().to_double(), tr.im.width().to_double(), d.mag().to_double()});
    worst = std::max(worst, w);
    o.require(d.contains_zero() && w < 1e-30, "trace identity at sample " + std::to_string(t));
  }
  RelatorOptions ro;
  ro.max_denominator = 2;
  for (const auto& r : golden()) {
    const auto res = relator_search(r.symbol.p, r.symbol.q, gamma_of_n(r.symbol.n), ro);
    bool found = false;
    for (const auto& h : res.hits) found = found || (h.certified && h.slope == Slope(1, 2) && h.n == r.symbol.n);
    o.require(found, r.symbol.str() + " not certified at slope 1/2");
  }
  if (o.pass) o.detail << "100 samples, widest enclosure " << worst << "; 55 rows certified at slope 1/2";
}

void filter_soundness(Outcome& o) {
  int triples = 0, passing = 0;
  for (int p = 3; p <= 30; ++p)
    for (int q = p; q <= 30; ++q)
      for (int n = 2; n <= 30; ++n) {
        ++triples;
        const bool f = galois_positivity_filter(p, q, n);
        const bool one = oracle::negative_alpha_sq_conjugates(p, q, n) == 1;
        const std::string t = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
        o.require(f == one, "filter disagrees with the embedding count at " + t);
        if (!f) continue;
        ++passing;
        o.require(signature(alpha(p, q, n).min_poly()).complex_places == 1, "Q(alpha) signature at " + t);
      }
  for (const auto& r : golden())
    o.require(galois_positivity_filter(r.symbol.p, r.symbol.q, r.symbol.n), "filter rejects " + r.symbol.str());
  if (o.pass)
    o.detail << triples << " triples, " << passing << " pass, all with one complex place; no golden row rejected";
}

void oracle_equivalence(Outcome& o) {
  struct Case {
    Order p, q;
    std::string region;
    int dmax;
  };
  const Case cases[] = {{3, 3, "-2,1,0,2", 3}, {3, 5, "-2,0,1/2,2", 3}, {4, 6, "-1,2,0,1", 3}, {3, 3, "-3,-1,1,2", 2}};
  size_t total = 0;
  for (const auto& c : cases) {
    const SearchRegion r = SearchRegion::parse(c.region);
    const mpq_class bound = real_root_bound(c.p, c.q);
    long long visited = 0;
    const auto want = oracle::brute_force(c.dmax, r.re_lo.get_d(), r.re_hi.get_d(), r.im_lo.get_d(), r.im_hi.get_d(),
                                          bound.get_d(), &visited);
    o.require(visited <= 100000, c.region + " oracle box too large");
    ScanOptions so;
    so.relator_denominator = 0;
    so.include_failing = true;
    std::set<oracle::Coeffs> got;
    for (const auto& pt : enumerate_gammas(c.p, c.q, c.dmax, r, so)) got.insert(oracle::as_coeffs(pt.gamma.min_poly()));
    o.require(got == want, c.region + " sets differ");
    total += want.size();
  }
  if (o.pass) o.detail << "4 boxes, " << total << " polynomials, exact set equality";
}

void parabolic(Outcome& o) {
  ScanOptions so;
  so.relator_denominator = 20;
  const auto pts = parabolic_scan(SearchRegion{}, true, so);
  auto check = [&](const IntPoly& m, const std::string& name) {
    for (const auto& c : pts) {
      if (!(c.rho->min_poly() == m)) continue;
      bool hit = false;
      for (const auto& h : c.relator_hits) hit = hit || h.certified;
      o.require(c.status() == "candidate", name + " is " + c.status());
      o.require(hit, name + " has no certified relator");
      if (hit) o.detail << name << " first hit " << c.relator_hits.front().slope.str() << "; ";
      return;
    }
    o.require(false, name + " missing");
  };
  check(IntPoly{2, -1, 1}, "(1+i sqrt7)/2");
  check(IntPoly{2, 0, 1}, "i sqrt2");
  so.relator_denominator = 0;
  const auto full = parabolic_scan(SearchRegion{}, false, so);
  const auto half = parabolic_scan(SearchRegion{}, true, so);
  size_t axis = 0;
  for (const auto& c : full) axis += c.rho->min_poly()[1] == 0;
  for (const auto& c : half) o.require(c.rho->approx().real() >= 0, "reduced scan kept Re rho < 0");
  o.require(full.size() == 2 * half.size() - axis, "reduction count");
  if (o.pass) o.detail << full.size() << " points reduce to " << half.size() << " (" << axis << " on the axis)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"golden table", golden_table},       {"hand-derived anchors", anchors},
      {"signature law", signature_law},     {"field discriminant law", discriminant_law},
      {"farey anchor", farey_anchor},       {"filter soundness", filter_soundness},
      {"oracle equivalence", oracle_equivalence}, {"parabolic scan", parabolic},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << o.detail.str()
              << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
    std::cout.unsetf(std::ios::fixed);
  }
  return failed ? 1 : 0;
}
