#include "heckoid/roots.hpp"

#include <algorithm>
#include <cmath>

#include "heckoid/sturm.hpp"

namespace heckoid {

namespace {

// Round-to-nearest complex float used by the Aberth iteration only.
struct CF {
  Float re, im;
  explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

void set_prec_keep(CF& z, mpfr_prec_t p) {
  mpfr_prec_round(z.re.get(), p, MPFR_RNDN);
  mpfr_prec_round(z.im.get(), p, MPFR_RNDN);
}

class Ops {
 public:
  explicit Ops(mpfr_prec_t p) : p_(p), t1_(p), t2_(p), t3_(p), t4_(p) {}

  void mul(CF& out, const CF& a, const CF& b) {
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t4_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(out.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t3_.get(), t4_.get(), MPFR_RNDN);
  }
  // Returns false when b is zero.
  bool div(CF& out, const CF& a, const CF& b) {
    Float d(p_);
    mpfr_sqr(t1_.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2_.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(d.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    if (mpfr_zero_p(d.get()) || !mpfr_number_p(d.get())) return false;
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t4_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(out.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), t3_.get(), t4_.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), out.re.get(), d.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), out.im.get(), d.get(), MPFR_RNDN);
    return true;
  }
  void add(CF& out, const CF& a, const CF& b) {
    mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  void sub(CF& out, const CF& a, const CF& b) {
    mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  // log2 |z|, -inf for zero.
  double log2abs(const CF& z) {
    mpfr_hypot(t1_.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    if (mpfr_zero_p(t1_.get())) return -INFINITY;
    long e;
    double m = mpfr_get_d_2exp(&e, t1_.get(), MPFR_RNDN);
    return static_cast<double>(e) + std::log2(m);
  }

 private:
  mpfr_prec_t p_;
  Float t1_, t2_, t3_, t4_;
};

double log2abs(const mpz_class& v) {
  long e;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

// Aberth-Ehrlich iteration at precision p, refining z in place.
// Stops once every relative correction is below 2^-target_bits.
void aberth(const IntPoly& f, std::vector<CF>& z, mpfr_prec_t p, double target_bits, int max_iter) {
  const int n = f.degree();
  Ops ops(p);
  std::vector<Float> c;
  for (int i = 0; i <= n; ++i) {
    Float v(p);
    mpfr_set_z(v.get(), f[i].get_mpz_t(), MPFR_RNDN);
    c.push_back(std::move(v));
  }
  for (auto& zi : z) set_prec_keep(zi, p);
  CF pv(p), dv(p), ratio(p), s(p), tmp(p), one(p), w(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  for (int it = 0; it < max_iter; ++it) {
    double worst = -INFINITY;
    for (int i = 0; i < n; ++i) {
      // Horner for p and p'.
      mpfr_set(pv.re.get(), c[static_cast<size_t>(n)].get(), MPFR_RNDN);
      mpfr_set_zero(pv.im.get(), 1);
      mpfr_set_zero(dv.re.get(), 1);
      mpfr_set_zero(dv.im.get(), 1);
      for (int k = n - 1; k >= 0; --k) {
        ops.mul(tmp, dv, z[static_cast<size_t>(i)]);
        ops.add(dv, tmp, pv);
        ops.mul(tmp, pv, z[static_cast<size_t>(i)]);
        mpfr_add(pv.re.get(), tmp.re.get(), c[static_cast<size_t>(k)].get(), MPFR_RNDN);
        mpfr_set(pv.im.get(), tmp.im.get(), MPFR_RNDN);
      }
      if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) continue;
      if (!ops.div(ratio, pv, dv)) {
        // Stationary point: nudge off it.
        mpfr_add_d(z[static_cast<size_t>(i)].re.get(), z[static_cast<size_t>(i)].re.get(), 1e-3,
                   MPFR_RNDN);
        worst = INFINITY;
        continue;
      }
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        ops.sub(tmp, z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
        CF inv(p);
        if (!ops.div(inv, one, tmp)) continue;
        ops.add(s, s, inv);
      }
      ops.mul(tmp, ratio, s);
      ops.sub(tmp, one, tmp);
      if (!ops.div(w, ratio, tmp)) w = ratio;
      ops.sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(i)], w);
      double rel = ops.log2abs(w) - std::max(0.0, ops.log2abs(z[static_cast<size_t>(i)]));
      worst = std::max(worst, rel);
    }
    if (worst < -target_bits) return;
  }
}

std::vector<CF> initial_points(const IntPoly& f, mpfr_prec_t p) {
  const int n = f.degree();
  // Fujiwara-style radius from log2 |c_k / c_n|^(1/(n-k)).
  const double ln = log2abs(f.lead());
  double r = -INFINITY;
  for (int k = 0; k < n; ++k) {
    if (f[k] == 0) continue;
    r = std::max(r, (log2abs(f[k]) - ln) / (n - k));
  }
  if (!std::isfinite(r)) r = 0;
  std::vector<CF> z;
  for (int k = 0; k < n; ++k) {
    CF v(p);
    const double ang = 2 * M_PI * k / n + 0.7;
    mpfr_set_d(v.re.get(), std::cos(ang), MPFR_RNDN);
    mpfr_set_d(v.im.get(), std::sin(ang), MPFR_RNDN);
    mpfr_mul_2si(v.re.get(), v.re.get(), static_cast<long>(std::ceil(r)), MPFR_RNDN);
    mpfr_mul_2si(v.im.get(), v.im.get(), static_cast<long>(std::ceil(r)), MPFR_RNDN);
    z.push_back(std::move(v));
  }
  return z;
}

std::vector<CF> approximate(const IntPoly& f, mpfr_prec_t p) {
  auto z = initial_points(f, 64);
  aberth(f, z, 64, 48, 2000);
  if (p > 64) aberth(f, z, p, static_cast<double>(p) - 6, 200);
  return z;
}

bool box_less(const RootBox& a, const RootBox& b) {
  const int c = mpfr_cmp(a.box.re.lo().get(), b.box.re.lo().get());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.box.im.lo().get(), b.box.im.lo().get()) < 0;
}

// Makes the boxes of each conjugate pair exact mirror images.
void symmetrize(std::vector<RootBox>& roots) {
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].real || !roots[i].box.im.positive()) continue;
    const CInterval c = roots[i].box.conj();
    int partner = -1;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || roots[j].real || !roots[j].box.intersects(c)) continue;
      if (partner >= 0) throw PrecisionError("conjugate pairing ambiguous");
      partner = static_cast<int>(j);
    }
    if (partner < 0) throw PrecisionError("conjugate partner not found");
    RootBox& q = roots[static_cast<size_t>(partner)];
    q.box = CInterval(q.box.re.intersect(c.re), q.box.im.intersect(c.im));
    roots[i].box = q.box.conj();
  }
}

}  // namespace

std::vector<RootBox> isolate_roots(const IntPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  std::vector<RootBox> out;
  if (n < 1) return out;
  if (n == 1) {
    mpq_class r(-f[0], f[1]);
    r.canonicalize();
    RootBox b;
    b.box = CInterval(Interval(prec, r));
    b.real = true;
    out.push_back(std::move(b));
    return out;
  }
  auto z = approximate(f, prec);

  std::vector<CInterval> pts;
  for (auto& zi : z) {
    set_prec_keep(zi, prec);
    pts.emplace_back(Interval::point(zi.re), Interval::point(zi.im));
  }
  // Weierstrass corrections W_i = p(z_i) / (lc * prod (z_i - z_j)); the discs
  // D(z_i, n|W_i|) are inclusion discs and disjoint ones hold one root each.
  std::vector<Float> rad;
  const CInterval lc(prec, f.lead());
  for (int i = 0; i < n; ++i) {
    CInterval den = lc;
    for (int j = 0; j < n; ++j)
      if (j != i) den *= pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)];
    if (den.contains_zero()) throw PrecisionError("coincident root approximations");
    CInterval w = f.eval(pts[static_cast<size_t>(i)]) / den;
    Float r = w.mag();
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    rad.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Float d = (pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]).mig();
      Float s(prec);
      mpfr_add(s.get(), rad[static_cast<size_t>(i)].get(), rad[static_cast<size_t>(j)].get(), MPFR_RNDU);
      if (mpfr_cmp(d.get(), s.get()) <= 0) throw PrecisionError("inclusion discs overlap");
    }
  }
  // Discs meeting the real axis must match the exact real-root count.
  const int nreal = sturm_real_roots(f);
  std::vector<bool> meets(static_cast<size_t>(n));
  int nmeet = 0;
  for (int i = 0; i < n; ++i) {
    Float a(prec);
    mpfr_abs(a.get(), z[static_cast<size_t>(i)].im.get(), MPFR_RNDN);
    meets[static_cast<size_t>(i)] = mpfr_cmp(a.get(), rad[static_cast<size_t>(i)].get()) <= 0;
    if (meets[static_cast<size_t>(i)]) ++nmeet;
  }
  if (nmeet != nreal) throw PrecisionError("real roots not separated from the real axis");

  for (int i = 0; i < n; ++i) {
    RootBox b;
    const Float& r = rad[static_cast<size_t>(i)];
    b.box.re = Interval::point(z[static_cast<size_t>(i)].re).inflate(r);
    if (meets[static_cast<size_t>(i)]) {
      b.real = true;
      b.box.im = Interval(prec);
    } else {
      b.box.im = Interval::point(z[static_cast<size_t>(i)].im).inflate(r);
    }
    out.push_back(std::move(b));
  }
  symmetrize(out);
  std::sort(out.begin(), out.end(), box_less);
  return out;
}

std::vector<RootBox> isolate_roots(const IntPoly& f, const PrecisionPolicy& pol) {
  std::vector<RootBox> out;
  with_escalation(pol, "root isolation of " + f.str(), [&](mpfr_prec_t p) {
    try {
      out = isolate_roots(f, p);
      return true;
    } catch (const PrecisionError&) {
      return false;
    }
  });
  return out;
}

std::vector<std::complex<double>> approximate_roots(const IntPoly& f) {
  std::vector<std::complex<double>> out;
  if (f.degree() < 1) return out;
  auto z = approximate(f, 64);
  for (auto& zi : z) out.emplace_back(zi.re.to_double(), zi.im.to_double());
  return out;
}

int locate_root(const std::vector<RootBox>& roots, const CInterval& e) {
  int found = -1;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].box.intersects(e)) {
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
  }
  return found;
}

}  // namespace heckoid
