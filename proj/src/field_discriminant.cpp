#include "heckoid/field_discriminant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "heckoid/resultant.hpp"

namespace heckoid {

namespace {

// ---- integers ----

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's variant of Pollard rho.  Returns a nontrivial factor or 0.
mpz_class pollard_brent(const mpz_class& n, unsigned long c, long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = 2, x, g = 1, q = 1, ys, t;
  const long m = 128;
  long r = 1, spent = 0;
  auto f = [&](mpz_class& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (long i = 0; i < r; ++i) f(y);
    long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (long i = 0; i < std::min(m, r - k); ++i) {
        f(y);
        t = abs(x - y);
        q = q * t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    spent += r;
    if (spent > budget) return 0;
  }
  if (g == n) {
    do {
      f(ys);
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split(const mpz_class& n, long budget, std::map<mpz_class, int>& primes, std::vector<mpz_class>& left) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++primes[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split(s, budget, primes, left);
    split(s, budget, primes, left);
    return;
  }
  for (unsigned long c = 1; c <= 5; ++c) {
    mpz_class d = pollard_brent(n, c, budget);
    if (d != 0 && d != 1 && d != n) {
      split(d, budget, primes, left);
      split(n / d, budget, primes, left);
      return;
    }
  }
  left.push_back(n);
}

// ---- F_p[x], ascending coefficients in [0, p) ----

using Fp = std::vector<mpz_class>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class md(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

mpz_class inv_mod(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0) throw std::domain_error("not invertible mod p");
  return r;
}

Fp to_fp(const IntPoly& f, const mpz_class& p) {
  Fp out;
  for (const auto& c : f.coeffs()) out.push_back(md(c, p));
  trim(out);
  return out;
}

Fp fp_mul(const Fp& a, const Fp& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = md(v, p);
  trim(r);
  return r;
}

// a = q b + r
void fp_divmod(const Fp& a, const Fp& b, const mpz_class& p, Fp& q, Fp& r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpz_class li = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const size_t s = r.size() - b.size();
    const mpz_class c = md(r.back() * li, p);
    q[s] = c;
    for (size_t i = 0; i < b.size(); ++i) r[s + i] = md(r[s + i] - c * b[i], p);
    trim(r);
  }
  trim(q);
}

Fp fp_monic(Fp a, const mpz_class& p) {
  if (a.empty()) return a;
  const mpz_class li = inv_mod(a.back(), p);
  for (auto& v : a) v = md(v * li, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, const mpz_class& p) {
  while (!b.empty()) {
    Fp q, r;
    fp_divmod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

Fp fp_div(const Fp& a, const Fp& b, const mpz_class& p) {
  Fp q, r;
  fp_divmod(a, b, p, q, r);
  if (!r.empty()) throw std::logic_error("inexact division in F_p[x]");
  return q;
}

Fp fp_deriv(const Fp& a, const mpz_class& p) {
  Fp r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(md(a[i] * static_cast<unsigned long>(i), p));
  trim(r);
  return r;
}

// Product of the distinct monic irreducible factors of a (a nonzero).
Fp fp_radical(const Fp& a0, const mpz_class& p) {
  Fp a = fp_monic(a0, p);
  if (a.size() <= 1) return {1};
  Fp d = fp_deriv(a, p);
  if (d.empty()) {
    // a = b(x)^p with b's coefficients read off at multiples of p (a^(1/p) = a in F_p).
    const size_t step = p.get_ui();
    Fp b;
    for (size_t i = 0; i < a.size(); i += step) b.push_back(a[i]);
    return fp_radical(b, p);
  }
  Fp u = fp_gcd(a, d, p);
  Fp w = fp_div(a, u, p);
  Fp z = u;
  while (true) {
    Fp g = fp_gcd(z, w, p);
    if (g.size() <= 1) break;
    z = fp_div(z, g, p);
  }
  return fp_monic(fp_mul(w, fp_radical(z, p), p), p);
}

// ---- Round 2 over an order given by a rational basis ----

using QMat = std::vector<std::vector<mpq_class>>;
using ZMat = std::vector<std::vector<mpz_class>>;

QMat q_inverse(QMat a) {
  const size_t n = a.size();
  QMat inv(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular basis");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const mpq_class s = 1 / a[c][c];
    for (size_t k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

mpq_class q_det(QMat a) {
  const size_t n = a.size();
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Row-style Hermite normal form of a full-rank lattice in Z^n; returns n rows.
ZMat hnf(ZMat rows, size_t n) {
  size_t r0 = 0;
  for (size_t c = 0; c < n; ++c) {
    // Euclid on column c over rows r0..end.
    while (true) {
      size_t best = rows.size();
      for (size_t r = r0; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) throw std::domain_error("lattice not of full rank");
      std::swap(rows[r0], rows[best]);
      bool done = true;
      for (size_t r = r0 + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[r0][c].get_mpz_t());
        for (size_t k = c; k < n; ++k) rows[r][k] -= q * rows[r0][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r0][c] < 0)
      for (size_t k = c; k < n; ++k) rows[r0][k] = -rows[r0][k];
    ++r0;
  }
  rows.resize(n);
  // Reduce above-diagonal entries.
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < c; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[c][c].get_mpz_t());
      if (q != 0)
        for (size_t k = c; k < n; ++k) rows[r][k] -= q * rows[c][k];
    }
  return rows;
}

// Left kernel of a (rows x cols) matrix over F_p: vectors v with v a = 0.
ZMat left_kernel_mod(const ZMat& a, size_t cols, const mpz_class& p) {
  const size_t n = a.size();
  // Work on the transpose augmented with the identity tracking row operations.
  ZMat m(n, std::vector<mpz_class>(cols + n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = md(a[i][j], p);
    m[i][cols + i] = 1;
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < n; ++c) {
    size_t piv = r;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[r]);
    const mpz_class s = inv_mod(m[r][c], p);
    for (auto& v : m[r]) v = md(v * s, p);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpz_class f = m[i][c];
      for (size_t k = 0; k < cols + n; ++k) m[i][k] = md(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  ZMat out;
  for (size_t i = r; i < n; ++i) out.emplace_back(m[i].begin() + static_cast<long>(cols), m[i].end());
  return out;
}

class Order {
 public:
  Order(const IntPoly& f, QMat basis) : f_(f), n_(static_cast<size_t>(f.degree())), b_(std::move(basis)) {
    const QMat binv = q_inverse(b_);
    table_.assign(n_, std::vector<std::vector<mpz_class>>(n_, std::vector<mpz_class>(n_)));
    const RatPoly fr(f_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t k = i; k < n_; ++k) {
        RatPoly prod = (element(i) * element(k)) % fr;
        for (size_t m = 0; m < n_; ++m) {
          mpq_class s = 0;
          for (size_t j = 0; j < n_; ++j) s += prod.coeff(static_cast<int>(j)) * binv[j][m];
          if (s.get_den() != 1) throw std::logic_error("basis does not span a ring");
          table_[i][k][m] = table_[k][i][m] = s.get_num();
        }
      }
  }

  size_t n() const { return n_; }
  const QMat& basis() const { return b_; }

  std::vector<mpz_class> mul_mod(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y,
                                 const mpz_class& p) const {
    std::vector<mpz_class> r(n_);
    for (size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (size_t k = 0; k < n_; ++k) {
        if (y[k] == 0) continue;
        const mpz_class c = x[i] * y[k];
        for (size_t m = 0; m < n_; ++m) r[m] += c * table_[i][k][m];
      }
    }
    for (auto& v : r) v = md(v, p);
    return r;
  }

  std::vector<mpz_class> mul(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) const {
    std::vector<mpz_class> r(n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t k = 0; k < n_; ++k)
        for (size_t m = 0; m < n_; ++m) r[m] += x[i] * y[k] * table_[i][k][m];
    return r;
  }

  std::vector<mpz_class> pow_mod(std::vector<mpz_class> x, mpz_class e, const mpz_class& p) const {
    std::vector<mpz_class> r(n_);
    r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul_mod(r, x, p);
      x = mul_mod(x, x, p);
      e >>= 1;
    }
    return r;
  }

  std::vector<mpz_class> one() const {
    // Coordinates of 1 in this basis.
    const QMat binv = q_inverse(b_);
    std::vector<mpz_class> r(n_);
    for (size_t m = 0; m < n_; ++m) r[m] = mpq_class(binv[0][m]).get_num();
    return r;
  }

 private:
  RatPoly element(size_t i) const { return RatPoly(b_[i]); }

  IntPoly f_;
  size_t n_;
  QMat b_;
  std::vector<std::vector<std::vector<mpz_class>>> table_;
};

// One round-2 enlargement at p.  Returns false when the order is p-maximal.
bool enlarge(const IntPoly& f, QMat& basis, const mpz_class& p) {
  Order o(f, basis);
  const size_t n = o.n();
  // Radical of pO: kernel of Frobenius^j on O/pO with p^j >= n.
  mpz_class q = p;
  while (q < static_cast<unsigned long>(n)) q *= p;
  ZMat frob(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> e(n);
    e[i] = 1;
    frob[i] = o.pow_mod(e, q, p);
  }
  ZMat gens = left_kernel_mod(frob, n, p);
  for (size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> e(n);
    e[i] = p;
    gens.push_back(e);
  }
  const ZMat ip = hnf(gens, n);
  QMat ipq(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ipq[i][j] = ip[i][j];
  const QMat ipinv = q_inverse(ipq);

  // x -> (β -> xβ) from O/pO to End(I_p / p I_p).
  ZMat act(n, std::vector<mpz_class>(n * n));
  for (size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> e(n);
    e[i] = 1;
    for (size_t k = 0; k < n; ++k) {
      auto prod = o.mul(e, ip[k]);
      for (size_t m = 0; m < n; ++m) {
        mpq_class s = 0;
        for (size_t j = 0; j < n; ++j) s += prod[j] * ipinv[j][m];
        if (s.get_den() != 1) throw std::logic_error("radical is not an ideal");
        act[i][k * n + m] = s.get_num();
      }
    }
  }
  ZMat ugens = left_kernel_mod(act, n * n, p);
  for (size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> e(n);
    e[i] = p;
    ugens.push_back(e);
  }
  const ZMat u = hnf(ugens, n);
  bool same = true;
  for (size_t i = 0; i < n && same; ++i)
    for (size_t j = 0; j < n; ++j)
      if (u[i][j] != (i == j ? p : mpz_class(0))) {
        same = false;
        break;
      }
  if (same) return false;
  QMat next(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      mpq_class s = 0;
      for (size_t k = 0; k < n; ++k) s += u[i][k] * basis[k][j];
      next[i][j] = s / p;
    }
  basis = std::move(next);
  return true;
}


}  // namespace

IntegerFactorization factor_integer(const mpz_class& n0, long rho_budget) {
  IntegerFactorization out;
  mpz_class n = abs(n0);
  if (n == 0) throw std::invalid_argument("factor_integer(0)");
  std::map<mpz_class, int> primes;
  for (unsigned long d = 2; d < 100000 && n > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_class(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++primes[mpz_class(d)];
      n /= d;
    }
  }
  std::vector<mpz_class> left;
  split(n, rho_budget, primes, left);
  for (auto& [p, e] : primes) out.primes.emplace_back(p, e);
  for (auto& c : left) out.cofactor *= c;
  return out;
}

bool dedekind_is_p_maximal(const IntPoly& f, const mpz_class& p) {
  if (!f.is_monic()) throw std::invalid_argument("Dedekind test needs a monic polynomial");
  const Fp fb = to_fp(f, p);
  const Fp g = fp_radical(fb, p);
  const Fp h = fp_div(fb, g, p);
  // F = (f - g~ h~) / p
  IntPoly gl(std::vector<mpz_class>(g.begin(), g.end()));
  IntPoly hl(std::vector<mpz_class>(h.begin(), h.end()));
  IntPoly diff = f - gl * hl;
  std::vector<mpz_class> fc;
  for (const auto& c : diff.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) throw std::logic_error("Dedekind lift not divisible");
    fc.push_back(md(c / p, p));
  }
  trim(fc);
  const Fp common = fp_gcd(fp_gcd(fc, g, p), h, p);
  return common.size() <= 1;
}

int index_exponent(const IntPoly& f, const mpz_class& p) {
  const size_t n = static_cast<size_t>(f.degree());
  QMat basis(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i) basis[i][i] = 1;
  if (dedekind_is_p_maximal(f, p)) return 0;
  while (enlarge(f, basis, p)) {
  }
  mpq_class det = q_det(basis);
  // det = 1 / p^k
  mpz_class den = det.get_den();
  int k = 0;
  while (den > 1) {
    if (!mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) throw std::logic_error("index is not a power of p");
    den /= p;
    ++k;
  }
  return k;
}

FieldDiscriminant field_discriminant(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("field discriminant of a constant");
  const IntPoly f = monic_integral(p.primitive_part());
  FieldDiscriminant out;
  if (f.degree() == 1) {
    out.value = 1;
    return out;
  }
  const mpz_class d = poly_discriminant(f);
  out.value = d;
  const auto fac = factor_integer(d);
  for (const auto& [q, e] : fac.primes) {
    if (e < 2) continue;
    const int k = index_exponent(f, q);
    for (int i = 0; i < 2 * k; ++i) out.value /= q;
  }
  if (!fac.complete()) out.unresolved.push_back(fac.cofactor);
  return out;
}

}  // namespace heckoid
