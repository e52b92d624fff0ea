#include "heckoid/candidate_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "heckoid/cyclotomic.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/sturm.hpp"

namespace heckoid {

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

unsigned worker_count(bool parallel) {
  return parallel && mpfr_buildopt_tls_p() ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
}

// Runs body(i) for i in [0, n) on the worker pool.
template <class Body>
void parallel_for(size_t n, bool parallel, Body&& body) {
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < n; i = next++) body(i);
  };
  const unsigned threads = worker_count(parallel);
  if (threads <= 1 || n < 2) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

struct QInterval {
  mpq_class lo, hi;
};

QInterval square_range(const mpq_class& lo, const mpq_class& hi) {
  const mpq_class a = lo * lo, b = hi * hi;
  if (lo <= 0 && hi >= 0) return {0, std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

int cmp_float(const Float& x, const mpq_class& q) { return mpfr_cmp_q(x.get(), q.get_mpq_t()); }

// Upper root of f inside the region: 1 inside, 0 outside, -1 undecided.
int region_test(const CInterval& b, const SearchRegion& r) {
  const Interval norm = b.norm();
  const mpq_class im_lo = std::max(r.im_lo, mpq_class(0));
  if (cmp_float(b.re.hi(), r.re_lo) < 0 || cmp_float(b.re.lo(), r.re_hi) > 0 ||
      cmp_float(b.im.hi(), im_lo) < 0 || cmp_float(b.im.lo(), r.im_hi) > 0)
    return 0;
  if (r.max_abs && cmp_float(norm.lo(), *r.max_abs * *r.max_abs) > 0) return 0;
  bool inside = cmp_float(b.re.lo(), r.re_lo) >= 0 && cmp_float(b.re.hi(), r.re_hi) <= 0 &&
                cmp_float(b.im.lo(), im_lo) >= 0 && cmp_float(b.im.hi(), r.im_hi) <= 0;
  if (r.max_abs) inside = inside && cmp_float(norm.hi(), *r.max_abs * *r.max_abs) <= 0;
  return inside ? 1 : -1;
}

// Closed region; a root still straddling the boundary at the precision cap lies on it.
bool upper_root_in_region(const AlgebraicNumber& z, const SearchRegion& r, const PrecisionPolicy& pol) {
  for (mpfr_prec_t prec = pol.start; prec <= pol.cap; prec = pol.next(prec)) {
    const int t = region_test(z.enclosure(prec), r);
    if (t >= 0) return t == 1;
  }
  return true;
}

std::optional<AlgebraicNumber> upper_root(const IntPoly& f, const PrecisionPolicy& pol) {
  for (auto& z : AlgebraicNumber::roots_of(f, pol))
    if (!z.is_real() && z.box().im.positive()) return z;
  return std::nullopt;
}

struct Disc {
  CInterval c;
  Interval r;
};

bool discs_of(const std::vector<Mat2>& elems, std::vector<Disc>& out) {
  for (const auto& h : elems) {
    if (h.c.contains_zero()) return false;
    const CInterval inv = h.c.inv();
    out.push_back({-(h.d * inv), inv.norm().sqrt()});
  }
  return true;
}

bool disjoint(const Disc& a, const Disc& b) {
  const Interval rr = (a.r + b.r).sqr();
  return (a.c - b.c).norm().lo().sign() > 0 &&
         mpfr_cmp(rr.hi().get(), (a.c - b.c).norm().lo().get()) < 0;
}

std::vector<Mat2> powers(const Mat2& f, Order p) {
  if (p == kParabolic) return {f, f.inverse()};
  std::vector<Mat2> out{f};
  for (Order k = 2; k < p; ++k) out.push_back(out.back() * f);
  return out;
}

Mat2 conjugate(const Mat2& h, const Mat2& t) { return t * h * t.inverse(); }

// Fixed points of z -> (a z + b)/(c z + d) in C, for a matrix that is not
// the identity.
std::vector<std::complex<double>> finite_fixed_points(const Mat2& h) {
  const std::complex<double> a = h.a.to_complex(), b = h.b.to_complex(), c = h.c.to_complex(),
                             d = h.d.to_complex();
  std::vector<std::complex<double>> out;
  if (std::abs(c) < 1e-300) {
    if (std::abs(a - d) > 1e-300) out.push_back(b / (d - a));
    return out;
  }
  const std::complex<double> disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
  out.push_back((a - d + disc) / (2.0 * c));
  out.push_back((a - d - disc) / (2.0 * c));
  return out;
}

// f = [[a, β], [0, 1/a]] fixes ∞: z -> a²z + aβ, a rotation by 2π/p about
// aβ/(1 - a²), or the translation by aβ when parabolic.  Its fundamental
// domain is a sector of angle 2π/p (a strip between a line and its translate).  Klein combination: the closed isometric discs of
// the powers of g inside the open domain.
bool domain_pingpong(const Mat2& f, Order p, const Mat2& g, Order q) {
  const mpfr_prec_t prec = f.a.prec();
  std::vector<Disc> discs;
  if (!discs_of(powers(g, q), discs)) return false;
  auto point = [prec](std::complex<double> z) {
    return CInterval(Interval::from_double(prec, z.real()), Interval::from_double(prec, z.imag()));
  };
  // Re((c - base) conj(n)) - r > 0, rigorously.
  auto inside = [&](const CInterval& base, std::complex<double> n, const Disc& d, const Interval& shift) {
    const CInterval v = (d.c - base) * point(std::conj(n));
    return (v.re - d.r - shift).positive();
  };
  if (p == kParabolic) {
    // Strip between the line through P with normal n and its translate by τ.
    const CInterval tau = f.a * f.b;
    const std::complex<double> tau_d = tau.to_complex();
    double best = 0, best_phi = 0, best_lo = 0;
    for (int i = 0; i < 360; ++i) {
      const double phi = i * M_PI / 180;
      const std::complex<double> n = std::polar(1.0, phi);
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& d : discs) {
        const double s = (d.c.to_complex() * std::conj(n)).real(), r = d.r.to_double();
        lo = std::min(lo, s - r);
        hi = std::max(hi, s + r);
      }
      const double slack = (tau_d * std::conj(n)).real() - (hi - lo);
      if (slack > best) {
        best = slack;
        best_phi = phi;
        best_lo = lo;
      }
    }
    if (best <= 0) return false;
    const std::complex<double> n = std::polar(1.0, best_phi);
    const CInterval base = point((best_lo - best / 2) * n);
    const Interval zero(prec);
    const Interval width = (tau * point(std::conj(n))).re;
    for (const auto& d : discs) {
      if (!inside(base, n, d, zero)) return false;
      // Re((c - base) n̄) + r < Re(τ n̄).
      const CInterval v = (d.c - base) * point(std::conj(n));
      if (!(width - v.re - d.r).positive()) return false;
    }
    return true;
  }
  const CInterval one(prec, mpz_class(1));
  const CInterval centre = f.a * f.b / (one - f.a * f.a);
  const std::complex<double> zc = centre.to_complex();
  const double half = M_PI / p - 1e-9;
  double best = 0, best_beta = 0;
  for (int i = 0; i < 720; ++i) {
    const double beta = i * M_PI / 360;
    double worst = 0;
    for (const auto& d : discs) {
      const std::complex<double> w = d.c.to_complex() - zc;
      const double r = d.r.to_double();
      if (std::abs(w) <= r) return false;
      const double diff = std::remainder(std::arg(w) - beta, 2 * M_PI);
      worst = std::max(worst, std::fabs(diff) + std::asin(r / std::abs(w)));
    }
    if (half - worst > best) {
      best = half - worst;
      best_beta = beta;
    }
  }
  if (best <= 0) return false;
  const std::complex<double> n1 = std::polar(1.0, best_beta + half - M_PI / 2);
  const std::complex<double> n2 = std::polar(1.0, best_beta - half + M_PI / 2);
  const Interval zero(prec);
  for (const auto& d : discs)
    if (!inside(centre, n1, d, zero) || !inside(centre, n2, d, zero)) return false;
  return true;
}

std::optional<std::string> pingpong(const GeneratorPair& m, Order p, Order q) {
  if (domain_pingpong(m.f, p, m.g, q)) return "isometric_circle_pingpong";
  {
    // z -> -1/z makes g upper triangular.
    const mpfr_prec_t prec = m.f.a.prec();
    const CInterval zero(prec), one(prec, mpz_class(1));
    const Mat2 j{zero, one, -one, zero};
    if (domain_pingpong(conjugate(m.g, j), q, conjugate(m.f, j), p)) return "isometric_circle_pingpong";
  }
  const mpfr_prec_t prec = m.f.a.prec();
  std::vector<std::complex<double>> fixed = finite_fixed_points(m.f);
  for (auto z : finite_fixed_points(m.g)) fixed.push_back(z);
  std::complex<double> centre = 0;
  for (auto z : fixed) centre += z;
  if (!fixed.empty()) centre /= static_cast<double>(fixed.size());
  double radius = 1;
  for (auto z : fixed) radius = std::max(radius, std::abs(z - centre));
  const auto fp = powers(m.f, p), gp = powers(m.g, q);
  for (int u = -2; u <= 2; ++u)
    for (int v = -2; v <= 2; ++v) {
      const std::complex<double> t = centre + radius * std::complex<double>(u, v) * 0.75;
      bool near = false;
      for (auto z : fixed) near = near || std::abs(z - t) < 1e-3 * radius;
      if (near) continue;
      // T(z) = 1/(t - z).
      const CInterval zero(prec), one(prec, mpz_class(1));
      const CInterval tt{Interval::from_double(prec, t.real()), Interval::from_double(prec, t.imag())};
      const Mat2 tm{zero, one, -one, tt};
      std::vector<Mat2> a, b;
      for (const auto& h : fp) a.push_back(conjugate(h, tm));
      for (const auto& h : gp) b.push_back(conjugate(h, tm));
      std::vector<Disc> da, db;
      if (!discs_of(a, da) || !discs_of(b, db)) continue;
      bool ok = true;
      for (const auto& x : da) {
        for (const auto& y : db)
          if (!disjoint(x, y)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) return "isometric_circle_pingpong";
    }
  return std::nullopt;
}

}  // namespace

bool SearchRegion::empty() const {
  if (re_lo > re_hi || im_lo > im_hi || im_hi <= 0) return true;
  return max_abs && *max_abs < 0;
}

SearchRegion SearchRegion::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 4 && parts.size() != 5)
    throw std::invalid_argument("region must be re_lo,re_hi,im_lo,im_hi[,max_abs]");
  SearchRegion r;
  r.re_lo = parse_rational(parts[0]);
  r.re_hi = parse_rational(parts[1]);
  r.im_lo = parse_rational(parts[2]);
  r.im_hi = parse_rational(parts[3]);
  if (parts.size() == 5) r.max_abs = parse_rational(parts[4]);
  return r;
}

std::string SearchRegion::str() const {
  std::string s = re_lo.get_str() + "," + re_hi.get_str() + "," + im_lo.get_str() + "," + im_hi.get_str();
  if (max_abs) s += "," + max_abs->get_str();
  return s;
}

std::vector<IntRange> coefficient_bounds(int d, const SearchRegion& region, const mpq_class& real_bound) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (region.empty()) return {};
  const mpq_class im_lo = std::max(region.im_lo, mpq_class(0));
  const QInterval xs = square_range(region.re_lo, region.re_hi);
  const QInterval ys = square_range(im_lo, region.im_hi);
  QInterval norm{xs.lo + ys.lo, xs.hi + ys.hi};
  if (region.max_abs) norm.hi = std::min(norm.hi, mpq_class(*region.max_abs * *region.max_abs));
  if (norm.lo > norm.hi) return {};
  // (z² - 2x z + N) · prod (z + s_i), s_i in [0, B].  Each coefficient is
  // affine in x, N and every s_i, so its range is attained at a corner; by
  // symmetry only the number k of s_i at B matters.
  std::vector<QInterval> poly;
  for (const mpq_class& x : {region.re_lo, region.re_hi})
    for (const mpq_class& n : {norm.lo, norm.hi})
      for (int k = 0; k <= d - 2; ++k) {
        std::vector<mpq_class> c{n, -2 * x, 1};
        for (int i = 0; i < d - 2; ++i) {
          const mpq_class s = i < k ? real_bound : mpq_class(0);
          std::vector<mpq_class> next(c.size() + 1, mpq_class(0));
          for (size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j] * s;
            next[j + 1] += c[j];
          }
          c = std::move(next);
        }
        if (poly.empty()) {
          for (const auto& v : c) poly.push_back({v, v});
          continue;
        }
        for (size_t j = 0; j < c.size(); ++j) {
          poly[j].lo = std::min(poly[j].lo, c[j]);
          poly[j].hi = std::max(poly[j].hi, c[j]);
        }
      }
  std::vector<IntRange> out;
  for (int j = 0; j < d; ++j) {
    mpz_class lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), poly[static_cast<size_t>(j)].lo.get_num_mpz_t(),
               poly[static_cast<size_t>(j)].lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), poly[static_cast<size_t>(j)].hi.get_num_mpz_t(),
               poly[static_cast<size_t>(j)].hi.get_den_mpz_t());
    if (lo > hi) return {};
    out.emplace_back(lo, hi);
  }
  return out;
}

mpq_class real_root_bound(Order p, Order q) {
  auto orbit = [](Order o) {
    std::vector<long double> c;
    if (o == kParabolic) return std::vector<long double>{1.0L};
    for (long k = 1; k < o; ++k)
      if (gcd_long(k, o) == 1) c.push_back(std::cos(2 * M_PIl * k / o));
    if (c.empty()) c.push_back(1.0L);
    return c;
  };
  long double best = 0;
  for (long double a : orbit(p))
    for (long double b : orbit(q)) best = std::max(best, (1 - a) * (1 - b));
  const long scale = 1L << 20;
  return mpq_class(static_cast<long>(std::ceil(best * scale)) + 1, scale);
}

std::vector<IntPoly> lattice_candidates(int degree_max, const SearchRegion& region,
                                        const mpq_class& real_bound, long long cap,
                                        const PrecisionPolicy& pol) {
  std::vector<IntPoly> out;
  for (int d = 2; d <= degree_max; ++d) {
    const auto ranges = coefficient_bounds(d, region, real_bound);
    if (ranges.empty()) continue;
    std::vector<long long> size;
    long long total = 1;
    for (const auto& [lo, hi] : ranges) {
      const mpz_class n = hi - lo + 1;
      if (!n.fits_slong_p() || total > cap / n.get_si() + 1)
        throw SearchOverflow("coefficient box for degree " + std::to_string(d) + " exceeds the cap of " +
                             std::to_string(cap) + " lattice points");
      total *= n.get_si();
      size.push_back(n.get_si());
    }
    if (total > cap)
      throw SearchOverflow("coefficient box for degree " + std::to_string(d) + " has " +
                           std::to_string(total) + " lattice points, cap " + std::to_string(cap));
    const long long chunk = 256;
    const size_t chunks = static_cast<size_t>((total + chunk - 1) / chunk);
    std::vector<std::vector<IntPoly>> found(chunks);
    parallel_for(chunks, true, [&](size_t ci) {
      for (long long idx = static_cast<long long>(ci) * chunk;
           idx < std::min(total, static_cast<long long>(ci + 1) * chunk); ++idx) {
        // a_0 is the most significant digit.
        std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
        long long rest = idx;
        for (int j = d - 1; j >= 0; --j) {
          c[static_cast<size_t>(j)] = ranges[static_cast<size_t>(j)].first + static_cast<long>(rest % size[static_cast<size_t>(j)]);
          rest /= size[static_cast<size_t>(j)];
        }
        c.back() = 1;
        IntPoly f(std::move(c));
        if (f[0] == 0) continue;
        // Layout first; a reducible polynomial contributes nothing new since
        // each admissible factor lies in the box of its own degree.
        if (squarefree_part(f).degree() != d) continue;
        if (sturm_real_roots(f) != d - 2) continue;
        if (d > 2 && sturm_real_roots(f, -real_bound, mpq_class(0)) != d - 2) continue;
        if (!is_irreducible(f, pol)) continue;
        auto z = upper_root(f, pol);
        if (!z || !upper_root_in_region(*z, region, pol)) continue;
        found[ci].push_back(std::move(f));
      }
    });
    for (auto& v : found)
      for (auto& f : v) out.push_back(std::move(f));
  }
  return out;
}

std::optional<std::string> free_exclusion(Order p, Order q, const AlgebraicNumber& gamma,
                                          const PrecisionPolicy& pol) {
  CInterval g = gamma.enclosure(pol.start);
  if (gamma.is_real()) g.im = Interval(pol.start);
  return pingpong(generator_matrices(p, q, g), p, q);
}

std::optional<std::string> free_exclusion_parabolic(const AlgebraicNumber& rho, const PrecisionPolicy& pol) {
  // |ρ|² exactly when ρ is rational or a nonreal quadratic.
  const IntPoly& m = rho.min_poly();
  std::optional<mpq_class> norm;
  if (rho.is_rational()) norm = rho.rational_value() * rho.rational_value();
  if (m.degree() == 2 && !rho.is_real()) norm = mpq_class(m[0], m[2]);
  if (norm) {
    if (*norm >= 16) return "riley_modulus";
  } else if (cmp_float(rho.enclosure(pol.start).norm().lo(), mpq_class(16)) >= 0) {
    return "riley_modulus";
  }
  CInterval r = rho.enclosure(pol.start);
  if (rho.is_real()) r.im = Interval(pol.start);
  return pingpong(parabolic_matrices(r), kParabolic, kParabolic);
}

std::string CandidatePoint::status() const {
  if (excluded_by) return "excluded";
  return report.all_pass() ? "candidate" : "fails";
}

std::vector<CandidatePoint> enumerate_gammas(Order p, Order q, int degree_max, const SearchRegion& region,
                                             const ScanOptions& opt) {
  if (degree_max > 10) throw std::invalid_argument("degree_max is at most 10");
  if (p == kParabolic || q == kParabolic) throw std::invalid_argument("use parabolic_scan for parabolic pairs");
  const auto polys = lattice_candidates(degree_max, region, real_root_bound(p, q), opt.cap, opt.policy);
  std::vector<std::optional<CandidatePoint>> pts(polys.size());
  std::mutex mu;
  std::exception_ptr failure;
  parallel_for(polys.size(), opt.parallel, [&](size_t i) {
    try {
      CandidatePoint c;
      c.p = p;
      c.q = q;
      c.gamma = *upper_root(polys[i], opt.policy);
      c.report = check_arithmetic_subgroup({p, q, c.gamma}, opt.policy);
      if (!c.report.all_pass() && !opt.include_failing) return;
      c.excluded_by = free_exclusion(p, q, c.gamma, opt.policy);
      if (!c.excluded_by && opt.relator_denominator > 0) {
        RelatorOptions ro;
        ro.max_denominator = opt.relator_denominator;
        ro.parallel = false;
        ro.policy = opt.policy;
        auto res = relator_search(p, q, c.gamma, ro);
        c.relator_hits = std::move(res.hits);
        c.near_misses = std::move(res.near_misses);
      }
      pts[i] = std::move(c);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  std::vector<CandidatePoint> out;
  for (auto& c : pts)
    if (c) out.push_back(std::move(*c));
  return out;
}

std::vector<CandidatePoint> parabolic_scan(const SearchRegion& region, bool symmetry_reduce,
                                           const ScanOptions& opt) {
  std::vector<IntPoly> polys;
  if (!region.empty()) {
    // ρ = (-b + i sqrt(4c - b²))/2.
    mpz_class b_lo, b_hi;
    const mpq_class lo = -2 * region.re_hi, hi = -2 * region.re_lo;
    mpz_cdiv_q(b_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(b_hi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (symmetry_reduce) b_hi = std::min(b_hi, mpz_class(0));
    const mpq_class im_lo = std::max(region.im_lo, mpq_class(0));
    std::vector<std::pair<mpz_class, mpz_class>> cb;
    for (mpz_class b = b_lo; b <= b_hi; ++b) {
      // 4 im_lo² <= 4c - b² <= 4 im_hi², 4c - b² > 0, and c <= max_abs².
      const mpq_class c_hi_q = region.im_hi * region.im_hi + mpq_class(b * b, 4);
      mpz_class c_hi;
      mpz_fdiv_q(c_hi.get_mpz_t(), c_hi_q.get_num_mpz_t(), c_hi_q.get_den_mpz_t());
      if (region.max_abs) {
        const mpq_class r2 = *region.max_abs * *region.max_abs;
        mpz_class m;
        mpz_fdiv_q(m.get_mpz_t(), r2.get_num_mpz_t(), r2.get_den_mpz_t());
        c_hi = std::min(c_hi, m);
      }
      for (mpz_class c = b * b / 4; c <= c_hi; ++c) {
        const mpz_class disc = 4 * c - b * b;
        if (disc <= 0) continue;
        if (mpq_class(disc, 4) < im_lo * im_lo) continue;
        cb.emplace_back(c, b);
      }
    }
    std::sort(cb.begin(), cb.end());
    for (const auto& [c, b] : cb) polys.push_back(IntPoly(std::vector<mpz_class>{c, b, 1}));
  }
  std::vector<CandidatePoint> pts(polys.size());
  std::mutex mu;
  std::exception_ptr failure;
  parallel_for(polys.size(), opt.parallel, [&](size_t i) {
    try {
      const mpfr_prec_t prec = opt.policy.start;
      const IntPoly& f = polys[i];
      const Interval re(prec, mpq_class(-f[1], 2));
      const Interval im = Interval(prec, mpq_class(4 * f[0] - f[1] * f[1], 4)).sqrt();
      CandidatePoint c;
      c.p = c.q = kParabolic;
      c.rho = AlgebraicNumber(f, CInterval(re, im), opt.policy);
      c.gamma = square(*c.rho, opt.policy);
      c.report = parabolic_check(*c.rho, ParabolicField::Rho, opt.policy);
      c.excluded_by = free_exclusion_parabolic(*c.rho, opt.policy);
      if (!c.excluded_by && opt.relator_denominator > 0) {
        RelatorOptions ro;
        ro.max_denominator = opt.relator_denominator;
        ro.parallel = false;
        ro.policy = opt.policy;
        auto res = relator_search_parabolic(*c.rho, ro);
        c.relator_hits = std::move(res.hits);
        c.near_misses = std::move(res.near_misses);
      }
      pts[i] = std::move(c);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  if (!opt.include_failing)
    pts.erase(std::remove_if(pts.begin(), pts.end(), [](const CandidatePoint& c) { return !c.report.all_pass(); }),
              pts.end());
  return pts;
}

}  // namespace heckoid
