#include "heckoid/farey.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "heckoid/cyclotomic.hpp"

namespace heckoid {

Slope::Slope(long r_, long s_) : r(r_), s(s_) {
  if (s <= 0 || r < 0 || r > s || std::gcd(r, s) != 1)
    throw std::invalid_argument("invalid slope " + std::to_string(r) + "/" + std::to_string(s));
}

Slope Slope::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("slope must be r/s: " + text);
  size_t used = 0;
  long r = 0, s = 0;
  try {
    r = std::stol(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string tail = text.substr(slash + 1);
    s = std::stol(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("slope must be r/s: " + text);
  }
  return Slope(r, s);
}

std::string Slope::str() const { return std::to_string(r) + "/" + std::to_string(s); }

FareyWord farey_word(const Slope& slope) {
  FareyWord w;
  w.reserve(static_cast<size_t>(2 * slope.s));
  for (long i = 1; i <= 2 * slope.s; ++i) {
    const long fl = (i * slope.r) / slope.s;
    w.push_back({i % 2 == 1 ? 'a' : 'b', fl % 2 == 0 ? 1 : -1});
  }
  return w;
}

std::string word_str(const FareyWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

namespace {

Interval half(mpfr_prec_t prec) { return Interval(prec, mpq_class(1, 2)); }

CInterval both_roots_box(const CInterval& z) {
  Interval r = Interval::point(z.mag());
  r = r.sqrt();
  Interval box = r.hull(-r);
  return {box, box};
}

// Principal square root.  A box meeting the negative real axis is sent to
// i sqrt(-z); a box that cannot be resolved gets a box holding both roots.
CInterval sqrt_principal(const CInterval& z) {
  const mpfr_prec_t prec = z.prec();
  if (z.contains_zero()) return both_roots_box(z);
  const Interval absz = z.norm().sqrt();
  if (z.re.positive()) {
    Interval u = ((absz + z.re) * half(prec)).sqrt();
    if (!u.positive()) return both_roots_box(z);
    return {u, z.im / (u * Interval(prec, mpz_class(2)))};
  }
  if (!z.im.contains_zero()) {
    Interval v = ((absz - z.re) * half(prec)).sqrt();
    if (!v.positive()) return both_roots_box(z);
    if (z.im.negative()) v = -v;
    return {z.im / (v * Interval(prec, mpz_class(2))), v};
  }
  CInterval w = sqrt_principal(-z);
  return {-w.im, w.re};
}

CInterval unit_angle(mpfr_prec_t prec, Order p) {
  if (p == kParabolic) return CInterval(prec, mpz_class(1));
  return {cos_pi_rational(prec, 1, p), sin_pi_rational(prec, 1, p)};
}

}  // namespace

GeneratorPair generator_matrices(Order p, Order q, const CInterval& gamma) {
  const mpfr_prec_t prec = gamma.prec();
  const CInterval x = unit_angle(prec, p), y = unit_angle(prec, q);
  const CInterval xi = x.conj(), yi = y.conj();
  const CInterval sigma = (x - xi) * (y - yi);
  const CInterval four(prec, mpz_class(4));
  const CInterval root = sqrt_principal(sigma * sigma + four * gamma);
  const CInterval mu = (root - sigma) * half(prec);
  const CInterval zero(prec), one(prec, mpz_class(1));
  return {{x, one, zero, xi}, {y, zero, mu, yi}};
}

GeneratorPair parabolic_matrices(const CInterval& rho) {
  const mpfr_prec_t prec = rho.prec();
  const CInterval zero(prec), one(prec, mpz_class(1));
  return {{one, one, zero, one}, {one, zero, rho, one}};
}

CInterval word_trace(const FareyWord& w, const GeneratorPair& m) {
  const Mat2 fi = m.f.inverse(), gi = m.g.inverse();
  const mpfr_prec_t prec = m.f.a.prec();
  const CInterval zero(prec), one(prec, mpz_class(1));
  Mat2 acc{one, zero, zero, one};
  for (const auto& l : w) {
    const Mat2& x = l.gen == 'a' ? (l.exp > 0 ? m.f : fi) : (l.exp > 0 ? m.g : gi);
    acc = acc * x;
  }
  return acc.trace();
}

CInterval farey_trace(const Slope& slope, Order p, Order q, const CInterval& gamma) {
  return word_trace(farey_word(slope), generator_matrices(p, q, gamma));
}

std::vector<Slope> enumerate_slopes(long max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("max denominator must be >= 1");
  struct Node {
    long lr, ls, rr, rs;  // left and right parents
  };
  std::vector<Slope> out{Slope(0, 1), Slope(1, 1)};
  std::vector<Node> level{{0, 1, 1, 1}};
  while (!level.empty()) {
    std::vector<Node> next;
    for (const auto& nd : level) {
      const long r = nd.lr + nd.rr, s = nd.ls + nd.rs;
      if (s > max_denominator) continue;
      out.emplace_back(r, s);
      next.push_back({nd.lr, nd.ls, r, s});
      next.push_back({r, s, nd.rr, nd.rs});
    }
    level = std::move(next);
  }
  return out;
}

std::string GroupSymbol::str() const {
  std::ostringstream os;
  os << '(' << order_str(p) << ',' << order_str(q) << ';' << slope.str() << ',' << n << ")_" << index;
  return os.str();
}

namespace {

// What the certificate needs to know about a generator family.
struct TraceSource {
  std::function<GeneratorPair(mpfr_prec_t)> gens;
  Order p = kParabolic, q = kParabolic;
  long base_degree = 1;       // degree contributed by γ (and the quadratic for μ)
  long double per_letter = 0;  // log2 bound per b-letter pair on conjugates
  long double log2_lead = 0;   // c^s (trace - target) is an algebraic integer
};

long double cauchy_bound(const IntPoly& m) {
  const long double lead = std::fabs(mpz_get_d(m.lead().get_mpz_t()));
  long double best = 0;
  for (int i = 0; i < m.degree(); ++i)
    best = std::max(best, std::fabs(static_cast<long double>(mpz_get_d(m[i].get_mpz_t()))) / lead);
  return 1 + best;
}

long double log2_abs_lead(const IntPoly& m) {
  return std::log2(std::fabs(static_cast<long double>(mpz_get_d(m.lead().get_mpz_t()))));
}

long real_cos_degree(long l) { return l <= 2 ? 1 : euler_phi(2 * l) / 2; }

CInterval target(mpfr_prec_t prec, int n, int k) {
  Interval v = n == 0 ? Interval(prec, mpz_class(2))
                      : cos_pi_rational(prec, std::abs(k), n) * Interval(prec, mpz_class(2));
  if (k < 0) v = -v;
  return CInterval(v);
}

double log2_upper(const Float& x) {
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDU);
  return static_cast<double>(e) + std::log2(m);
}

Verdict certify(const TraceSource& src, const Slope& slope, int n, int k,
                const PrecisionPolicy& pol) {
  const auto w = farey_word(slope);
  long l = 1;
  for (Order o : {src.p, src.q})
    if (o != kParabolic) l = lcm_long(l, o);
  if (n > 0) l = lcm_long(l, n);
  const long double degree = static_cast<long double>(real_cos_degree(l) * src.base_degree);
  const long double log2_house = slope.s * src.per_letter + 3;
  // A nonzero algebraic integer of degree D has a conjugate of size at least
  // house^-(D-1); the trace difference carries the extra factor c^-s.
  const long double need = (degree - 1) * log2_house + slope.s * src.log2_lead;
  for (mpfr_prec_t prec = pol.start; prec <= pol.cap; prec = pol.next(prec)) {
    const CInterval d = word_trace(w, src.gens(prec)) - target(prec, n, k);
    if (!d.contains_zero()) return Verdict::Fail;
    const Float m = d.mag();
    if (m.sign() == 0 || log2_upper(m) < -need) return Verdict::Pass;
  }
  return Verdict::Undetermined;
}

struct Target {
  int n, k;
  double value;
};

std::vector<Target> targets(const RelatorOptions& opt) {
  std::vector<Target> out;
  std::vector<std::pair<long, long>> seen;  // angle / π as a reduced fraction
  auto add = [&](int n, int k) {
    const long num = k > 0 ? k : n + k, den = n;
    const long g = std::gcd(num, den);
    const std::pair<long, long> key{num / g, den / g};
    for (const auto& s : seen)
      if (s == key) return;
    seen.push_back(key);
    out.push_back({n, k, (k < 0 ? -2.0 : 2.0) * std::cos(std::abs(k) * M_PI / n)});
  };
  if (opt.cusps) {
    out.push_back({0, 1, 2.0});
    out.push_back({0, -1, -2.0});
  }
  for (int n = 2; n <= opt.max_order; ++n) {
    add(n, 1);
    add(n, -1);
    if (n % 2 == 1) {
      add(n, 2);
      add(n, -2);
    }
  }
  return out;
}

struct SlopeOutcome {
  std::vector<RelatorHit> hits, misses;
};

SlopeOutcome examine(const TraceSource& src, const GeneratorPair& start, const Slope& slope,
                     const std::vector<Target>& tg, const RelatorOptions& opt) {
  SlopeOutcome out;
  const CInterval t = word_trace(farey_word(slope), start);
  const double tre = t.re.mid().to_double();
  const double tim = t.im.mid().to_double();
  if (!(std::fabs(tim) <= opt.tolerance && tre >= -2 - opt.tolerance && tre <= 2 + opt.tolerance))
    return out;
  for (const auto& c : tg) {
    const double dist = std::hypot(tre - c.value, tim);
    if (dist > opt.tolerance) continue;
    const Verdict v = certify(src, slope, c.n, c.k, opt.policy);
    RelatorHit h{slope, c.n, c.k, tre, v == Verdict::Pass, "", dist};
    if (v == Verdict::Pass) {
      out.hits.push_back(h);
      out.misses.clear();
      return out;
    }
    h.note = v == Verdict::Fail ? "nonzero" : "undecided";
    out.misses.push_back(h);
  }
  return out;
}

RelatorSearchResult search(const TraceSource& src, const RelatorOptions& opt) {
  const auto slopes = enumerate_slopes(opt.max_denominator);
  const auto tg = targets(opt);
  const GeneratorPair start = src.gens(opt.policy.start);
  std::vector<SlopeOutcome> outcomes(slopes.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < slopes.size(); i = next++)
      outcomes[i] = examine(src, start, slopes[i], tg, opt);
  };
  const unsigned threads =
      opt.parallel && mpfr_buildopt_tls_p() ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  RelatorSearchResult res;
  for (auto& o : outcomes) {
    for (auto& h : o.hits) res.hits.push_back(std::move(h));
    for (auto& h : o.misses) res.near_misses.push_back(std::move(h));
  }
  return res;
}

TraceSource elliptic_source(Order p, Order q, const AlgebraicNumber& gamma) {
  TraceSource src;
  src.p = p;
  src.q = q;
  const bool real = gamma.is_real();
  src.gens = [p, q, gamma, real](mpfr_prec_t prec) {
    CInterval g = gamma.enclosure(prec);
    if (real) g.im = Interval(prec);
    return generator_matrices(p, q, g);
  };
  src.base_degree = 2L * gamma.degree();
  const long double m = 2 + std::sqrt(4 + cauchy_bound(gamma.min_poly()));
  src.log2_lead = log2_abs_lead(gamma.min_poly());
  src.per_letter = src.log2_lead + 0.5L * std::log2(3 * (2 + m * m));
  return src;
}

TraceSource parabolic_source(const AlgebraicNumber& rho) {
  TraceSource src;
  const bool real = rho.is_real();
  src.gens = [rho, real](mpfr_prec_t prec) {
    CInterval r = rho.enclosure(prec);
    if (real) r.im = Interval(prec);
    return parabolic_matrices(r);
  };
  src.base_degree = rho.degree();
  const long double m = cauchy_bound(rho.min_poly());
  src.log2_lead = log2_abs_lead(rho.min_poly());
  src.per_letter = src.log2_lead + 0.5L * std::log2(3 * (2 + m * m));
  return src;
}

}  // namespace

RelatorSearchResult relator_search(Order p, Order q, const AlgebraicNumber& gamma,
                                   const RelatorOptions& opt) {
  return search(elliptic_source(p, q, gamma), opt);
}

RelatorSearchResult relator_search_parabolic(const AlgebraicNumber& rho, const RelatorOptions& opt) {
  return search(parabolic_source(rho), opt);
}

Verdict certify_trace(Order p, Order q, const AlgebraicNumber& gamma, const Slope& slope, int n,
                      int k, const PrecisionPolicy& pol) {
  return certify(elliptic_source(p, q, gamma), slope, n, k, pol);
}

Verdict certify_trace_parabolic(const AlgebraicNumber& rho, const Slope& slope, int n, int k,
                                const PrecisionPolicy& pol) {
  return certify(parabolic_source(rho), slope, n, k, pol);
}

std::string hit_json(Order p, Order q, const RelatorHit& h) {
  nlohmann::ordered_json j;
  auto order = [](Order o) -> nlohmann::ordered_json {
    if (o == kParabolic) return "inf";
    return o;
  };
  j["p"] = order(p);
  j["q"] = order(q);
  j["slope"] = h.slope.str();
  j["n"] = order(h.n);
  j["k"] = h.k;
  j["trace_value"] = h.trace_value;
  j["certified"] = h.certified;
  if (!h.certified && !h.note.empty()) j["status"] = h.note;
  return j.dump();
}

}  // namespace heckoid
