#include "heckoid/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace heckoid {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

}  // namespace

IntPoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    IntPoly t = IntPoly::monomial(1, d) - IntPoly{1};
    if (mu > 0)
      num = num * t;
    else
      den = den * t;
  }
  return *divexact(num, den);
}

IntPoly dickson(int j) {
  IntPoly a{2}, b = IntPoly::x();
  if (j == 0) return a;
  for (int i = 1; i < j; ++i) {
    IntPoly c = IntPoly::x() * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

IntPoly real_cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  if (n == 1) return {-2, 1};
  if (n == 2) return {2, 1};
  const IntPoly phi = cyclotomic(n);
  const int h = phi.degree() / 2;
  IntPoly out(std::vector<mpz_class>{phi[h]});
  for (int j = 1; j <= h; ++j) out += dickson(j) * phi[h + j];
  return out;
}

IntPoly two_cos_min_poly(long k, long m) {
  if (m == 0) throw std::invalid_argument("zero denominator");
  if (m < 0) {
    k = -k;
    m = -m;
  }
  const long g = std::gcd(k, 2 * m);
  return real_cyclotomic(static_cast<int>(2 * m / g));
}

}  // namespace heckoid
