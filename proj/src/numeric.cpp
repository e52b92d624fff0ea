#include "heckoid/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "heckoid/precision.hpp"

namespace heckoid {

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Float::Float(mpfr_prec_t prec, double v) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Float::Float(const Float& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Float::Float(Float&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Float& Float::operator=(const Float& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Float::~Float() { mpfr_clear(v_); }

mpq_class to_rational(const Float& f) {
  if (!mpfr_number_p(f.get())) throw std::domain_error("non-finite float");
  if (mpfr_zero_p(f.get())) return 0;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f.get());
  mpq_class q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q = s;
  } else {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q = mpq_class(m, d);
    q.canonicalize();
  }
  return q;
}

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

Float max_of(const Float& a, const Float& b) { return mpfr_cmp(a.get(), b.get()) >= 0 ? a : b; }
Float min_of(const Float& a, const Float& b) { return mpfr_cmp(a.get(), b.get()) <= 0 ? a : b; }

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(mpfr_prec_t prec, const mpz_class& v) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(mpfr_prec_t prec, const mpq_class& v) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(mpfr_prec_t prec, const mpq_class& lo, const mpq_class& hi)
    : lo_(prec), hi_(prec) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Float& lo, const Float& hi) : lo_(lo), hi_(hi) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0) throw std::invalid_argument("interval with lo > hi");
  if (hi_.prec() != lo_.prec()) {
    Float h(lo_.prec());
    mpfr_set(h.get(), hi.get(), MPFR_RNDU);
    hi_ = std::move(h);
  }
}

Interval Interval::point(const Float& v) { return Interval(v, v); }

Interval Interval::from_double(mpfr_prec_t prec, double v) {
  Float f(std::max<mpfr_prec_t>(prec, 53), v);
  Interval r(prec);
  mpfr_set(r.lo_.get(), f.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), f.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Float Interval::mid() const {
  Float m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Float Interval::rad() const {
  Float m = mid();
  Float a(kRadPrec), b(kRadPrec);
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  return max_of(a, b);
}

Float Interval::width() const {
  Float w(kRadPrec);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Float Interval::mag() const {
  Float a(prec()), b(prec());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  return max_of(a, b);
}

Float Interval::mig() const {
  if (contains_zero()) return Float(prec());
  Float a(prec()), b(prec());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDD);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDD);
  return min_of(a, b);
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

bool Interval::intersects(const Interval& o) const {
  return mpfr_cmp(lo_.get(), o.hi_.get()) <= 0 && mpfr_cmp(o.lo_.get(), hi_.get()) <= 0;
}

bool Interval::subset_of(const Interval& o) const {
  return mpfr_cmp(o.lo_.get(), lo_.get()) <= 0 && mpfr_cmp(hi_.get(), o.hi_.get()) <= 0;
}

double Interval::to_double() const { return mid().to_double(); }

Interval Interval::operator-() const {
  Interval r(prec());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Float l(prec());
  mpfr_sub(l.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  lo_ = std::move(l);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  const mpfr_prec_t p = prec();
  const mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
  Float lo(p), hi(p), t(p);
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval Interval::inv() const {
  if (contains_zero()) throw PrecisionError("interval division by a range containing zero");
  Interval r(prec());
  mpfr_ui_div(r.lo_.get(), 1, hi_.get(), MPFR_RNDD);
  mpfr_ui_div(r.hi_.get(), 1, lo_.get(), MPFR_RNDU);
  return r;
}

Interval& Interval::operator/=(const Interval& o) { return *this *= o.inv(); }

Interval Interval::sqr() const {
  Interval r(prec());
  Float a = mig(), b = mag();
  mpfr_sqr(r.lo_.get(), a.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), b.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (negative()) throw std::domain_error("square root of a negative interval");
  Interval r(prec());
  if (lo_.sign() <= 0)
    mpfr_set_zero(r.lo_.get(), 1);
  else
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec());
  Float a = mig(), b = mag();
  mpfr_set(r.lo_.get(), a.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), b.get(), MPFR_RNDU);
  return r;
}

namespace {

// f is cos or sin; both are 1-Lipschitz.
Interval lipschitz_trig(const Interval& x, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  const mpfr_prec_t p = x.prec();
  Float m = x.mid(), r = x.rad();
  if (mpfr_cmp_ui(r.get(), 3) > 0) return Interval(Float(p, -1.0), Float(p, 1.0));
  Float lo(p), hi(p);
  f(lo.get(), m.get(), MPFR_RNDD);
  f(hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), r.get(), MPFR_RNDU);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return Interval(lo, hi);
}

}  // namespace

Interval Interval::cos() const { return lipschitz_trig(*this, mpfr_cos); }
Interval Interval::sin() const { return lipschitz_trig(*this, mpfr_sin); }

Interval Interval::hull(const Interval& o) const {
  return Interval(min_of(lo_, o.lo_), max_of(hi_, o.hi_));
}

Interval Interval::intersect(const Interval& o) const {
  if (!intersects(o)) throw std::domain_error("disjoint intervals");
  return Interval(max_of(lo_, o.lo_), min_of(hi_, o.hi_));
}

Interval Interval::inflate(const Float& r) const {
  Interval out(*this);
  mpfr_sub(out.lo_.get(), lo_.get(), r.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), hi_.get(), r.get(), MPFR_RNDU);
  return out;
}

bool Interval::round_to_integer(mpz_class& out) const {
  Float m = mid();
  mpz_class n;
  Float rnd(prec());
  mpfr_rint(rnd.get(), m.get(), MPFR_RNDN);
  mpfr_get_z(n.get_mpz_t(), rnd.get(), MPFR_RNDN);
  mpq_class lo_bound = mpq_class(n) - mpq_class(1, 4);
  mpq_class hi_bound = mpq_class(n) + mpq_class(1, 4);
  if (mpfr_cmp_q(lo_.get(), lo_bound.get_mpq_t()) > 0 &&
      mpfr_cmp_q(hi_.get(), hi_bound.get_mpq_t()) < 0) {
    out = n;
    return true;
  }
  return false;
}

std::string Interval::str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  std::ostringstream os;
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, lo_.get());
  os << "[" << buf.data() << ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, hi_.get());
  os << buf.data() << "]";
  return os.str();
}

namespace {

Interval narrow(const Interval& x, mpfr_prec_t prec) {
  Float lo(prec), hi(prec);
  mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(lo, hi);
}

}  // namespace

Interval cos_pi_rational(mpfr_prec_t prec, long k, long m) {
  if (m == 0) throw std::invalid_argument("zero denominator");
  Interval x = Interval::pi(prec + 16) * Interval(prec + 16, mpq_class(k, m));
  Interval c = x.cos();
  return narrow(c, prec);
}

Interval sin_pi_rational(mpfr_prec_t prec, long k, long m) {
  if (m == 0) throw std::invalid_argument("zero denominator");
  Interval x = Interval::pi(prec + 16) * Interval(prec + 16, mpq_class(k, m));
  Interval s = x.sin();
  return narrow(s, prec);
}

CInterval::CInterval(Interval r) : re(std::move(r)), im(re.prec()) {}

CInterval::CInterval(mpfr_prec_t prec, const mpz_class& v) : re(prec, v), im(prec) {}

CInterval& CInterval::operator+=(const CInterval& o) {
  re += o.re;
  im += o.im;
  return *this;
}

CInterval& CInterval::operator-=(const CInterval& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

CInterval& CInterval::operator*=(const CInterval& o) {
  if (im.is_point() && im.lo().sign() == 0 && o.im.is_point() && o.im.lo().sign() == 0) {
    re *= o.re;
    return *this;
  }
  Interval r = re * o.re - im * o.im;
  Interval i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

CInterval& CInterval::operator*=(const Interval& o) {
  re *= o;
  im *= o;
  return *this;
}

Interval CInterval::norm() const { return re.sqr() + im.sqr(); }

CInterval CInterval::inv() const {
  Interval n = norm();
  Interval ni = n.inv();
  return {re * ni, -(im * ni)};
}

CInterval& CInterval::operator/=(const CInterval& o) { return *this *= o.inv(); }

Float CInterval::mag() const {
  Float a = re.mag(), b = im.mag();
  Float s(prec());
  mpfr_sqr(a.get(), a.get(), MPFR_RNDU);
  mpfr_sqr(b.get(), b.get(), MPFR_RNDU);
  mpfr_add(s.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_sqrt(s.get(), s.get(), MPFR_RNDU);
  return s;
}

Float CInterval::mig() const {
  Float a = re.mig(), b = im.mig();
  Float s(prec());
  mpfr_sqr(a.get(), a.get(), MPFR_RNDD);
  mpfr_sqr(b.get(), b.get(), MPFR_RNDD);
  mpfr_add(s.get(), a.get(), b.get(), MPFR_RNDD);
  mpfr_sqrt(s.get(), s.get(), MPFR_RNDD);
  return s;
}

std::string CInterval::str(int digits) const {
  return "(" + re.str(digits) + " + i*" + im.str(digits) + ")";
}

CInterval unit_root(mpfr_prec_t prec, long k, long m) {
  return {cos_pi_rational(prec, k, m), sin_pi_rational(prec, k, m)};
}

namespace {

// Principal square root of an exact complex point (a, b), rounded to nearest.
void principal_sqrt(const Float& a, const Float& b, Float& wr, Float& wi) {
  const mpfr_prec_t p = a.prec() + 8;
  Float mod(p), t(p);
  mpfr_hypot(mod.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_add(t.get(), mod.get(), a.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  if (t.sign() < 0) mpfr_set_zero(t.get(), 1);
  mpfr_sqrt(wr.get(), t.get(), MPFR_RNDN);
  mpfr_sub(t.get(), mod.get(), a.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  if (t.sign() < 0) mpfr_set_zero(t.get(), 1);
  mpfr_sqrt(wi.get(), t.get(), MPFR_RNDN);
  if (b.sign() < 0) mpfr_neg(wi.get(), wi.get(), MPFR_RNDN);
}

CInterval sqrt_from_point(const CInterval& z, const Float& wr, const Float& wi) {
  const mpfr_prec_t p = z.prec();
  CInterval w0(Interval::point(wr), Interval::point(wi));
  CInterval d = z - w0 * w0;
  Float r = d.mag();
  Float m0 = w0.mig();
  // Rouché: with rho = 2r/|w0| <= |w0|/2 the disc around w0 holds exactly one root.
  Float rho(p), lim(p);
  mpfr_mul_2ui(rho.get(), r.get(), 1, MPFR_RNDU);
  mpfr_div(rho.get(), rho.get(), m0.get(), MPFR_RNDU);
  mpfr_div_2ui(lim.get(), m0.get(), 1, MPFR_RNDD);
  if (m0.sign() <= 0 || mpfr_cmp(rho.get(), lim.get()) > 0)
    throw PrecisionError("square root not isolated at this precision");
  return {Interval::point(wr).inflate(rho), Interval::point(wi).inflate(rho)};
}

}  // namespace

CInterval sqrt_near(const CInterval& z, std::complex<long double> guess) {
  const mpfr_prec_t p = z.prec();
  Float a = z.re.mid(), b = z.im.mid();
  Float wr(p), wi(p);
  principal_sqrt(a, b, wr, wi);
  long double dot = wr.to_long_double() * guess.real() + wi.to_long_double() * guess.imag();
  if (dot < 0) {
    mpfr_neg(wr.get(), wr.get(), MPFR_RNDN);
    mpfr_neg(wi.get(), wi.get(), MPFR_RNDN);
  }
  return sqrt_from_point(z, wr, wi);
}

CInterval sqrt_upper(const CInterval& z) {
  const mpfr_prec_t p = z.prec();
  Float a = z.re.mid(), b = z.im.mid();
  if (z.im.contains_zero() && z.re.negative()) mpfr_set_zero(b.get(), 1);
  Float wr(p), wi(p);
  principal_sqrt(a, b, wr, wi);
  return sqrt_from_point(z, wr, wi);
}

}  // namespace heckoid
