#include "heckoid/lll.hpp"

#include <stdexcept>

namespace heckoid {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Rounded quotient a / b for b > 0.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class n = 2 * a + b, d = 2 * b, q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

// Integral LLL after Cohen, A Course in Computational Algebraic Number Theory,
// Algorithm 2.6.7.  d[i] are the Gram determinants, lambda the scaled
// Gram-Schmidt coefficients.
void lll_reduce(IntMatrix& b) {
  const size_t n = b.size();
  if (n < 2) return;
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n, std::vector<mpz_class>(n));
  d[0] = 1;

  auto incgs = [&](size_t k) {
    for (size_t j = 0; j <= k; ++j) {
      mpz_class u = dot(b[k], b[j]);
      for (size_t i = 0; i < j; ++i) {
        u = d[i + 1] * u - lam[k][i] * lam[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
      }
      if (j < k) {
        lam[k][j] = u;
      } else {
        if (u == 0) throw std::invalid_argument("LLL input rows are dependent");
        d[k + 1] = u;
      }
    }
  };

  auto red = [&](size_t k, size_t l) {
    mpz_class two = 2 * abs(lam[k][l]);
    if (two <= d[l + 1]) return;
    mpz_class q = round_div(lam[k][l], d[l + 1]);
    for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l + 1];
    for (size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](size_t k) {
    std::swap(b[k], b[k - 1]);
    for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    mpz_class lm = lam[k][k - 1];
    mpz_class bb = d[k - 1] * d[k + 1] + lm * lm;
    mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), d[k].get_mpz_t());
    for (size_t i = k + 1; i < n; ++i) {
      mpz_class t = lam[i][k];
      mpz_class v = d[k + 1] * lam[i][k - 1] - lm * t;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d[k].get_mpz_t());
      lam[i][k] = v;
      mpz_class w = bb * t + lm * lam[i][k];
      mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), d[k + 1].get_mpz_t());
      lam[i][k - 1] = w;
    }
    d[k] = bb;
  };

  incgs(0);
  size_t kmax = 0;
  size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      incgs(k);
    }
    while (true) {
      red(k, k - 1);
      // Lovász test with delta = 99/100, scaled to integers.
      mpz_class lhs = 100 * d[k + 1] * d[k - 1];
      mpz_class rhs = 99 * d[k] * d[k] - 100 * lam[k][k - 1] * lam[k][k - 1];
      if (lhs < rhs) {
        swap(k);
        if (k > 1) --k;
        continue;
      }
      break;
    }
    for (size_t l = k - 1; l-- > 0;) red(k, l);
    ++k;
  }
}

}  // namespace heckoid
