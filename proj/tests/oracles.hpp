#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <set>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "heckoid/report.hpp"

namespace oracle {

// Distinct negative values of α² over every embedding k of Q(ζ_2L), in long
// double.  For real cyclotomic α² this is the number of complex places of Q(α).
inline int negative_alpha_sq_conjugates(int p, int q, int n) {
  const long l = std::lcm(std::lcm(static_cast<long>(p), static_cast<long>(q)), 2L * n);
  std::vector<long double> neg;
  for (long k = 1; k < 2 * l; ++k) {
    if (std::gcd(k, 2 * l) != 1) continue;
    const long double a2 = 2 + 2 * std::cos(2 * k * M_PIl / p);
    const long double b2 = 2 + 2 * std::cos(2 * k * M_PIl / q);
    const long double c = 2 * std::cos(k * M_PIl / n);
    const long double v = a2 * b2 * ((4 - a2) * (4 - b2) - 8 - 4 * c);
    if (v > -1e-12L) continue;
    bool seen = false;
    for (long double w : neg) seen = seen || std::fabs(w - v) < 1e-9L;
    if (!seen) neg.push_back(v);
  }
  return static_cast<int>(neg.size());
}

inline std::vector<heckoid::SlopeHalfRow> golden_rows() {
  std::ifstream in(std::string(HECKOID_DATA_DIR) + "/slope_half_55.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  return heckoid::parse_slope_half_csv(ss.str());
}

using Coeffs = std::vector<long>;

inline Coeffs as_coeffs(const heckoid::IntPoly& f) {
  Coeffs c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(f[i].get_si());
  return c;
}

inline Eigen::VectorXcd roots_of(const Coeffs& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -static_cast<double>(c[static_cast<size_t>(i)]);
  return m.eigenvalues();
}

inline bool has_integer_root(const Coeffs& c) {
  auto eval = [&](long x) {
    long v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  const long a0 = std::labs(c[0]);
  if (a0 == 0) return true;
  for (long t = 1; t <= a0; ++t)
    if (a0 % t == 0 && (eval(t) == 0 || eval(-t) == 0)) return true;
  return false;
}

// Unpruned scan: every monic integer polynomial whose coefficients fit the
// crude bound binom(d,k) M^k, kept when its eigenvalues have the layout.
inline std::set<Coeffs> brute_force(int dmax, double re_lo, double re_hi, double im_lo, double im_hi, double bound,
                                         long long* visited) {
  const double tol = 1e-9;
  const double m = std::max({std::hypot(re_lo, im_hi), std::hypot(re_hi, im_hi), bound});
  std::set<Coeffs> out;
  for (int d = 2; d <= dmax; ++d) {
    std::vector<long> lim(static_cast<size_t>(d));
    double binom = 1;
    for (int k = 1; k <= d; ++k) {
      binom = binom * (d - k + 1) / k;
      lim[static_cast<size_t>(d - k)] = static_cast<long>(std::ceil(binom * std::pow(m, k)));
    }
    Coeffs c(static_cast<size_t>(d) + 1, 0);
    c[static_cast<size_t>(d)] = 1;
    std::function<void(int)> rec = [&](int j) {
      if (j == d) {
        ++*visited;
        if (d == 3 && has_integer_root(c)) return;
        if (c[0] == 0) return;
        auto r = roots_of(c);
        int pairs = 0;
        bool ok = true;
        for (int i = 0; i < d; ++i) {
          const auto z = r(i);
          if (std::abs(z.imag()) > tol) {
            if (z.imag() > 0) {
              ++pairs;
              ok = ok && z.real() >= re_lo - tol && z.real() <= re_hi + tol && z.imag() >= im_lo - tol &&
                   z.imag() <= im_hi + tol;
            }
          } else {
            ok = ok && z.real() > -bound && z.real() < 0;
          }
        }
        if (ok && pairs == 1) out.insert(c);
        return;
      }
      for (long v = -lim[static_cast<size_t>(j)]; v <= lim[static_cast<size_t>(j)]; ++v) {
        c[static_cast<size_t>(j)] = v;
        rec(j + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace oracle
