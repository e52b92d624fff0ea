#pragma once

#include <string>
#include <vector>

#include "heckoid/algebraic.hpp"
#include "heckoid/criterion.hpp"
#include "heckoid/numeric.hpp"
#include "heckoid/precision.hpp"

namespace heckoid {

// Reduced r/s with 0 <= r <= s.
struct Slope {
  long r = 0;
  long s = 1;

  Slope() = default;
  // Throws std::invalid_argument unless gcd(r,s) = 1 and 0 <= r <= s.
  Slope(long r, long s);
  static Slope parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct Letter {
  char gen;  // 'a' or 'b'
  int exp;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using FareyWord = std::vector<Letter>;

// g_1 ... g_2s with g_i = a for odd i, b for even i and exponent
// (-1)^floor(i r / s).  Slope 1/2 gives a b^-1 a^-1 b.
FareyWord farey_word(const Slope& slope);
std::string word_str(const FareyWord& w);

struct Mat2 {
  CInterval a, b, c, d;
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;  // adjugate, exact for determinant one
  CInterval trace() const { return a + d; }
};

struct GeneratorPair {
  Mat2 f, g;
};

// f = [[x, 1], [0, 1/x]] with x = e^(iπ/p), g = [[y, 0], [μ, 1/y]] with
// y = e^(iπ/q), and μ the root of μ² + σμ - γ = 0 (σ = (x - 1/x)(y - 1/y))
// taken with the principal square root of σ² + 4γ.  Order kParabolic gives
// x = 1.  Then tr[f,g] - 2 = γ.
GeneratorPair generator_matrices(Order p, Order q, const CInterval& gamma);
// [[1,1],[0,1]] and [[1,0],[ρ,1]], so tr[f,g] - 2 = ρ².
GeneratorPair parabolic_matrices(const CInterval& rho);

CInterval word_trace(const FareyWord& w, const GeneratorPair& m);
CInterval farey_trace(const Slope& slope, Order p, Order q, const CInterval& gamma);

// Slopes in [0,1] with denominator <= n, breadth first through the
// Stern-Brocot tree: 0/1, 1/1, 1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...
// Count 1 + sum_{s<=n} φ(s).
std::vector<Slope> enumerate_slopes(long max_denominator);

enum class GroupClass { GeneralizedTriangle, PureHeckoid };

struct GroupSymbol {
  Order p = 0, q = 0;
  Slope slope;
  int n = 2;
  GroupClass cls = GroupClass::GeneralizedTriangle;
  int index = 1;
  // (p,q;r/s,n)_i
  std::string str() const;
};

struct RelatorHit {
  Slope slope;
  int n = 0;  // 0 for a parabolic (cusp) trace, which is 2 sign(k)
  int k = 0;  // trace = sign(k) 2cos(|k|π/n)
  double trace_value = 0;
  bool certified = false;
  std::string note;  // for near misses: "nonzero" or "undecided"
  double distance = 0;
};

struct RelatorSearchResult {
  std::vector<RelatorHit> hits;         // certified, in slope order
  std::vector<RelatorHit> near_misses;  // within tolerance, not certified
};

struct RelatorOptions {
  long max_denominator = 100;
  double tolerance = 1e-8;
  int max_order = 30;
  bool cusps = true;
  bool parallel = true;
  PrecisionPolicy policy{};
};

// Slopes whose trace lies in [-2,2] are matched to ±2cos(kπ/n), n <= max_order,
// k in {1,2} (2 only for odd n), and ±2.  Each match is certified exactly: the
// difference is an algebraic integer (after scaling out the denominator of γ)
// of bounded degree and bounded conjugates, so it vanishes once it is smaller
// than the reciprocal of its largest possible nonzero norm.
RelatorSearchResult relator_search(Order p, Order q, const AlgebraicNumber& gamma,
                                   const RelatorOptions& opt = {});
// Parabolic generators with parameter ρ.
RelatorSearchResult relator_search_parabolic(const AlgebraicNumber& rho,
                                             const RelatorOptions& opt = {});

// Decides whether the trace of `slope` equals sign 2cos(kπ/n) exactly.
// Returns Pass (equal), Fail (different) or Undetermined at the precision cap.
Verdict certify_trace(Order p, Order q, const AlgebraicNumber& gamma, const Slope& slope, int n,
                      int k, const PrecisionPolicy& pol = {});
Verdict certify_trace_parabolic(const AlgebraicNumber& rho, const Slope& slope, int n, int k,
                                const PrecisionPolicy& pol = {});

std::string hit_json(Order p, Order q, const RelatorHit& h);

}  // namespace heckoid
