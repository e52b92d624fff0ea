#include "heckoid/slope_half.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "heckoid/cyclotomic.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/field_discriminant.hpp"
#include "heckoid/sturm.hpp"

namespace heckoid {

AlgebraicNumber gamma_of_n(int n, const PrecisionPolicy& pol) {
  if (n < 2) throw std::invalid_argument("gamma_of_n needs n >= 2");
  if (n == 2) return AlgebraicNumber(mpq_class(-2));
  // 2cos(π/n) = -2 - γ.
  IntPoly m = two_cos_min_poly(1, n).compose(IntPoly{-2, -1});
  Interval v = cos_pi_rational(pol.start, 1, n) * Interval(pol.start, mpz_class(-2)) -
               Interval(pol.start, mpz_class(2));
  return AlgebraicNumber(m, CInterval(v), pol);
}

namespace {

void check_orders(int p, int q, int n) {
  if (p < 3 || q < 3 || n < 2) throw std::invalid_argument("need p, q >= 3 and n >= 2");
}

// One embedding per coset of the stabiliser of (A², B², C): k mod L with
// L = lcm(p, q, 2n), keyed by (±k mod p, ±k mod q, ±k mod 2n).  The identity
// comes first.
std::vector<long> coset_reps(int p, int q, int n) {
  const long l = lcm_long(lcm_long(p, q), 2L * n);
  std::vector<long> reps;
  std::vector<std::tuple<long, long, long>> seen;
  auto fold = [](long k, long m) { return std::min(k % m, m - k % m); };
  for (long k = 1; k < l; ++k) {
    if (gcd_long(k, l) != 1) continue;
    auto key = std::make_tuple(fold(k, p), fold(k, q), fold(k, 2L * n));
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    reps.push_back(k);
  }
  return reps;
}

Interval alpha_sq_at(mpfr_prec_t prec, int p, int q, int n, long k) {
  const Interval two(prec, mpz_class(2)), four(prec, mpz_class(4)), eight(prec, mpz_class(8));
  const Interval a2 = two + two * cos_pi_rational(prec, 2 * k, p);
  const Interval b2 = two + two * cos_pi_rational(prec, 2 * k, q);
  const Interval c = two * cos_pi_rational(prec, k, n);
  return a2 * b2 * ((four - a2) * (four - b2) - eight - four * c);
}

// Product over the coset representatives is the characteristic polynomial of
// α² over Q(A², B², C), a power of its minimal polynomial.
IntPoly min_poly_over_cosets(int p, int q, int n, const std::vector<long>& reps,
                             const PrecisionPolicy& pol) {
  OrbitFn orbit = [&](mpfr_prec_t prec) {
    std::vector<CInterval> out;
    out.reserve(reps.size());
    for (long k : reps) out.emplace_back(alpha_sq_at(prec, p, q, n, k));
    return out;
  };
  return min_poly_from_conjugates(orbit, true, pol);
}

std::string triple_str(int p, int q, int n) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
}

}  // namespace

IntPoly alpha_sq_min_poly(int p, int q, int n, const PrecisionPolicy& pol) {
  check_orders(p, q, n);
  return min_poly_over_cosets(p, q, n, coset_reps(p, q, n), pol);
}

AlgebraicNumber alpha(int p, int q, int n, const PrecisionPolicy& pol) {
  const IntPoly m = alpha_sq_min_poly(p, q, n, pol);
  if (m.degree() == 1 && m[0] == 0) throw DegenerateAlpha("alpha vanishes at " + triple_str(p, q, n));
  // Annihilator m(z²); its factor through α is the minimal polynomial.
  std::vector<mpz_class> c(static_cast<size_t>(2 * m.degree()) + 1);
  for (int i = 0; i <= m.degree(); ++i) c[static_cast<size_t>(2 * i)] = m[i];
  auto enclose = [p, q, n](mpfr_prec_t prec) {
    const Interval s = alpha_sq_at(prec, p, q, n, 1);
    if (s.negative()) return CInterval(Interval(prec), (-s).sqrt());
    if (s.positive()) return CInterval(s.sqrt());
    const Interval r = Interval::point(s.abs().sqrt().hi());
    return CInterval(Interval(prec).hull(r), Interval(prec).hull(r));
  };
  return algebraic_from_annihilator(IntPoly(std::move(c)), enclose, pol);
}

bool hyperfinite_vertex_check(int p, int q, int n) {
  auto hyperbolic = [n](long e) { return 2L * n + e < e * n; };
  return hyperbolic(p) || hyperbolic(q);
}

bool galois_positivity_filter(int p, int q, int n, const PrecisionPolicy& pol) {
  check_orders(p, q, n);
  const auto reps = coset_reps(p, q, n);
  // Early decision from signs: no negative value, or two negative values that
  // are provably distinct.
  bool decided = false, result = false;
  with_escalation(pol, "sign pattern of alpha^2 at " + triple_str(p, q, n), [&](mpfr_prec_t prec) {
    std::vector<Interval> neg;
    bool unsure = false;
    for (long k : reps) {
      Interval v = alpha_sq_at(prec, p, q, n, k);
      if (v.contains_zero()) {
        unsure = true;
        continue;
      }
      if (!v.negative()) continue;
      for (const auto& w : neg)
        if (!w.intersects(v)) {
          decided = true;
          result = false;
          return true;
        }
      neg.push_back(v);
    }
    if (unsure) return false;
    if (neg.empty()) {
      decided = true;
      result = false;
    }
    return true;
  });
  if (decided) return result;
  // All negative values overlap: count distinct negative roots exactly.
  const IntPoly m = min_poly_over_cosets(p, q, n, reps, pol);
  return sturm_real_roots(m, std::nullopt, mpq_class(0)) == 1;
}

bool takeuchi_arithmetic(Order a, Order b, Order c) {
  const Order e[3] = {a, b, c};
  long double inv_sum = 0;
  long l = 1;
  for (Order x : e) {
    if (x != kParabolic) {
      if (x < 2) throw std::invalid_argument("triangle orders must be >= 2");
      inv_sum += 1.0L / x;
      l = lcm_long(l, x);
    }
  }
  if (inv_sum >= 1) throw std::invalid_argument("triangle triple is not hyperbolic");
  // Embeddings of Q(ζ_2l) act by cos(π/e) -> cos(kπ/e), k odd and prime to l.
  auto cosk = [](Order x, long k) -> long double {
    return x == kParabolic ? 1.0L : std::cos(static_cast<long double>(k) * M_PIl / x);
  };
  auto invariants = [&](long k) {
    std::vector<long double> v;
    long double prod = 1;
    for (Order x : e) {
      v.push_back(2 * cosk(x, k) * cosk(x, k) - 1);  // cos(2π/e)
      prod *= cosk(x, k);
    }
    v.push_back(prod);
    return v;
  };
  auto lambda = [&](long k) {
    long double s = -1, prod = 2;
    for (Order x : e) {
      s += cosk(x, k) * cosk(x, k);
      prod *= cosk(x, k);
    }
    return s + prod;
  };
  const auto id = invariants(1);
  for (long k = 3; k < 2 * l; k += 2) {
    if (gcd_long(k, 2 * l) != 1) continue;
    const auto v = invariants(k);
    bool same = true;
    for (size_t i = 0; i < v.size(); ++i) same = same && std::fabs(v[i] - id[i]) < 1e-12L;
    if (same) continue;
    if (lambda(k) >= 0) return false;
  }
  return true;
}

std::vector<SlopeHalfRow> enumerate_slope_half(const SlopeHalfOptions& opt) {
  if (opt.p_max < 3 || opt.q_max < 3) throw std::invalid_argument("orders start at 3");
  if (opt.n_max < 2) throw std::invalid_argument("n starts at 2");
  std::vector<std::tuple<int, int, int>> triples;
  for (int n = 2; n <= opt.n_max; ++n)
    for (int p = 3; p <= opt.p_max; ++p)
      for (int q = p; q <= opt.q_max; ++q) triples.emplace_back(n, p, q);

  std::vector<std::optional<SlopeHalfRow>> found(triples.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    for (size_t i = next++; i < triples.size(); i = next++) {
      const auto [n, p, q] = triples[i];
      try {
        if (!hyperfinite_vertex_check(p, q, n)) continue;
        if (opt.takeuchi) {
          auto arith = [n = n](int e) {
            return 2L * n + e < static_cast<long>(e) * n && takeuchi_arithmetic(e, e, n);
          };
          if (!arith(p) && !arith(q)) continue;
        }
        if (!galois_positivity_filter(p, q, n, opt.policy)) continue;
        const AlgebraicNumber a = alpha(p, q, n, opt.policy);
        if (signature(a.min_poly(), opt.policy).complex_places != 1) continue;
        SlopeHalfRow row;
        row.symbol = GroupSymbol{p, q, Slope(1, 2), n, GroupClass::GeneralizedTriangle, 1};
        row.min_poly = a.min_poly();
        const FieldDiscriminant d = field_discriminant(row.min_poly);
        row.field_disc = d.value;
        row.field_disc_resolved = d.resolved();
        found[i] = std::move(row);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure)
          failure = std::make_exception_ptr(
              std::runtime_error("triple " + triple_str(p, q, n) + ": " + e.what()));
        next = triples.size();
      }
    }
  };
  const unsigned threads =
      opt.parallel && mpfr_buildopt_tls_p() ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SlopeHalfRow> rows;
  for (auto& r : found)
    if (r) {
      r->index = static_cast<int>(rows.size()) + 1;
      rows.push_back(std::move(*r));
    }
  return rows;
}

bool relator_consistency(const SlopeHalfRow& row, const PrecisionPolicy& pol) {
  const auto& s = row.symbol;
  if (!(s.slope == Slope(1, 2)) || s.p < 3 || s.q < 3 || s.n < 2) return false;
  const AlgebraicNumber a = alpha(s.p, s.q, s.n, pol);
  if (!(a.min_poly() == row.min_poly.primitive_part())) return false;
  const AlgebraicNumber g = gamma_of_n(s.n, pol);
  for (int k : {1, -1})
    if (certify_trace(s.p, s.q, g, Slope(1, 2), s.n, k, pol) == Verdict::Pass) return true;
  return false;
}

}  // namespace heckoid
