#include "heckoid/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace heckoid {

IntPoly::IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, int deg) {
  std::vector<mpz_class> v(static_cast<size_t>(deg) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  IntPoly r(*this);
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

bool IntPoly::is_even() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  // Homogenised Horner keeps the arithmetic in Z.
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  mpz_class acc = 0, dp = 1;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * n + c_[i] * dp;
    dp *= d;
  }
  mpz_class den = 1;
  if (!c_.empty()) mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), c_.size() - 1);
  mpq_class r(acc, den);
  r.canonicalize();
  return r;
}

int IntPoly::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

Interval IntPoly::eval(const Interval& x) const {
  const mpfr_prec_t p = x.prec();
  Interval r(p);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + Interval(p, c_[i]);
  return r;
}

CInterval IntPoly::eval(const CInterval& x) const {
  const mpfr_prec_t p = x.prec();
  CInterval r(p);
  for (size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r.re += Interval(p, c_[i]);
  }
  return r;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
  IntPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * q + IntPoly(std::vector<mpz_class>{c_[i]});
  return r;
}

IntPoly IntPoly::inflate(int k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> r(static_cast<size_t>(degree() * k) + 1);
  for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] = c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negate_var() const {
  IntPoly r(*this);
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    std::string term;
    const bool neg = v < 0;
    mpz_class a = abs(v);
    if (i == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + " ";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (neg)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out;
}

std::string IntPoly::json() const { return "[" + csv_coeffs() + "]"; }

std::string IntPoly::csv_coeffs() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].get_str();
  }
  return out;
}

IntPoly IntPoly::parse_coeffs(const std::string& s) {
  std::vector<mpz_class> v;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
              tok.end());
    if (tok.empty()) throw std::invalid_argument("empty coefficient in '" + s + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    mpz_class c;
    if (c.set_str(tok, 10) != 0) throw std::invalid_argument("bad coefficient '" + tok + "'");
    v.push_back(c);
  }
  if (v.empty()) throw std::invalid_argument("no coefficients");
  return IntPoly(std::move(v));
}

IntPoly IntPoly::parse_str(const std::string& s, const std::string& var) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  std::vector<mpz_class> v;
  size_t i = 0;
  auto put = [&](size_t deg, const mpz_class& c) {
    if (v.size() <= deg) v.resize(deg + 1);
    v[deg] += c;
  };
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    mpz_class c = 1;
    bool have_digits = j > i;
    if (have_digits) c.set_str(t.substr(i, j - i), 10);
    i = j;
    size_t deg = 0;
    if (t.compare(i, var.size(), var) == 0) {
      i += var.size();
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        size_t k = i;
        while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
        if (k == i) throw std::invalid_argument("bad exponent in '" + s + "'");
        deg = std::stoul(t.substr(i, k - i));
        i = k;
      }
    } else if (!have_digits) {
      throw std::invalid_argument("cannot parse polynomial '" + s + "'");
    }
    put(deg, sign * c);
  }
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs());
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
    mpz_class c = top / b.lead();
    q[static_cast<size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= c * b[j];
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  std::vector<mpz_class> r(a.coeffs());
  const int db = b.degree();
  int dr = a.degree();
  int e = dr - db + 1;
  while (dr >= db && dr >= 0) {
    mpz_class top = r[static_cast<size_t>(dr)];
    for (auto& v : r) v *= b.lead();
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(dr - db + j)] -= top * b[j];
    --e;
    r.resize(static_cast<size_t>(dr));
    dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
    r.resize(static_cast<size_t>(dr + 1));
  }
  IntPoly out(std::move(r));
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), b.lead().get_mpz_t(), static_cast<unsigned long>(e));
    out *= f;
  }
  return out;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  IntPoly a = a0.primitive_part(), b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPoly g = gcd(p, p.derivative());
  auto q = divexact(p.primitive_part(), g);
  return q->primitive_part();
}

IntPoly monic_integral(const IntPoly& m) {
  const int n = m.degree();
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
  mpz_class s = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<size_t>(i)] = m[i] * s;
    s *= m.lead();
  }
  c.back() = 1;
  return IntPoly(std::move(c));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p0) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p0.degree() <= 0) return out;
  IntPoly p = p0.primitive_part();
  IntPoly a = gcd(p, p.derivative());
  IntPoly b = *divexact(p, a);
  IntPoly c = *divexact(p.derivative(), a);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = *divexact(b, f);
    c = *divexact(d, f);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

RatPoly::RatPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly::RatPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r(*this);
  mpq_class l = lead();
  for (auto& v : r.c_) v /= l;
  return r;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(r));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

CInterval RatPoly::eval(const CInterval& x) const {
  const mpfr_prec_t p = x.prec();
  CInterval r(p);
  for (size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r.re += Interval(p, c_[i]);
  }
  return r;
}

Interval RatPoly::eval(const Interval& x) const {
  const mpfr_prec_t p = x.prec();
  Interval r(p);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + Interval(p, c_[i]);
  return r;
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * q + RatPoly::constant(c_[i]);
  return r;
}

mpz_class RatPoly::denominator() const {
  mpz_class d = 1;
  for (const auto& v : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

IntPoly RatPoly::to_primitive_int() const {
  mpz_class d = denominator();
  std::vector<mpz_class> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.get_num() * (d / c.get_den()));
  return IntPoly(std::move(v)).primitive_part();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<mpq_class> r(a.coeffs());
  std::vector<mpq_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  mpq_class inv = 1 / b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class c = r[static_cast<size_t>(k + db)] * inv;
    if (c == 0) continue;
    q[static_cast<size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= c * b[j];
  }
  r.resize(static_cast<size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a0, const RatPoly& b0) {
  RatPoly a = a0, b = b0;
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatBezout ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0{1}, s1, t0, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class l = 1 / r0.lead();
  return {r0 * l, s0 * l, t0 * l};
}

}  // namespace heckoid
