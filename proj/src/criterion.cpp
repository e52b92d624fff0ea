#include "heckoid/criterion.hpp"

#include "heckoid/field_discriminant.hpp"

namespace heckoid {

std::string order_str(Order o) { return o == kParabolic ? "inf" : std::to_string(o); }

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

RatPoly FrickeQuadratic::discriminant() const {
  // Not reduced modulo the field polynomial.
  return b * b - c * mpq_class(4);
}

std::optional<RatPoly> cos_coordinates(const NumberField& k, Order p) {
  if (p == kParabolic) return RatPoly::constant(1);
  return k.membership(trig_value(TrigKind::Cos, 2, p, k.policy()));
}

namespace {

struct LCoords {
  RatPoly cp, cq;
};

std::optional<LCoords> l_coords(const NumberField& k, Order p, Order q) {
  auto cp = cos_coordinates(k, p);
  if (!cp) return std::nullopt;
  auto cq = cos_coordinates(k, q);
  if (!cq) return std::nullopt;
  return LCoords{*cp, *cq};
}

FrickeQuadratic fricke_from(const NumberField& k, const LCoords& l) {
  // b = 16cos²(π/p)cos²(π/q) = 4(1 + c'_p)(1 + c'_q),
  // c = b(4cos²(π/q) - 4sin²(π/p) - γ) = b(2c'_p + 2c'_q - γ), c' = cos 2π/·
  const RatPoly one = RatPoly::constant(1);
  FrickeQuadratic f;
  f.b = k.mul(l.cp + one, l.cq + one) * mpq_class(4);
  f.c = k.mul(f.b, l.cp * mpq_class(2) + l.cq * mpq_class(2) - RatPoly{0, 1});
  return f;
}

// Upper margin -τ only; used when L is not available.
EmbeddingCheck upper_only(const AlgebraicNumber& tau, int index, const PrecisionPolicy& pol) {
  EmbeddingCheck e;
  e.root_index = index;
  for (mpfr_prec_t prec = pol.start; prec <= pol.cap; prec = pol.next(prec)) {
    e.tau = tau.enclosure(prec).re;
    e.upper_margin = -e.tau;
    if (e.upper_margin.negative()) {
      e.verdict = Verdict::Fail;
      return e;
    }
    if (e.upper_margin.positive()) {
      e.verdict = Verdict::Undetermined;
      return e;
    }
  }
  return e;
}

std::vector<EmbeddingCheck> checks_with(const NumberField& k, const LCoords& l) {
  const auto& pol = k.policy();
  std::vector<EmbeddingCheck> out;
  auto roots = AlgebraicNumber::roots_of(k.modulus(), pol);
  const RatPoly one = RatPoly::constant(1);
  // τ(γ) + B_σ is the embedding of this field element.
  const RatPoly lower = k.reduce(RatPoly{0, 1} + k.mul(one - l.cp, one - l.cq));
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].is_real()) continue;
    EmbeddingCheck e;
    e.root_index = static_cast<int>(i);
    for (mpfr_prec_t prec = pol.start; prec <= pol.cap; prec = pol.next(prec)) {
      const AlgebraicNumber tau = roots[i].refined(prec);
      const Interval t = tau.box().re;
      e.tau = t;
      e.upper_margin = -t;
      e.lower_margin = lower.degree() <= 0 ? Interval(prec, lower.coeff(0)) : lower.eval(t);
      if (e.upper_margin.negative() || e.lower_margin.negative()) {
        e.verdict = Verdict::Fail;
        break;
      }
      if (e.upper_margin.positive() && e.lower_margin.positive()) {
        e.verdict = Verdict::Pass;
        break;
      }
      if (lower.is_zero()) {
        // τ(γ) = -B_σ exactly: the strict inequality fails.
        e.verdict = Verdict::Fail;
        break;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

void fill_field_invariants(CriterionReport& r, const IntPoly& m, const PrecisionPolicy& pol) {
  r.field_signature = signature(m, pol);
  r.field_degree = r.field_signature.degree;
  const auto fd = field_discriminant(m);
  r.field_discriminant = fd.value;
  r.field_discriminant_resolved = fd.resolved();
}

}  // namespace

FrickeQuadratic fricke_quadratic(const NumberField& k, Order p, Order q) {
  auto l = l_coords(k, p, q);
  if (!l) throw std::invalid_argument("Q(gamma) does not contain cos 2pi/p and cos 2pi/q");
  return fricke_from(k, *l);
}

FrickeQuadratic fricke_quadratic(Order p, Order q, const AlgebraicNumber& gamma, const PrecisionPolicy& pol) {
  return fricke_quadratic(NumberField(gamma, pol), p, q);
}

std::vector<EmbeddingCheck> embedding_bounds_check(const NumberField& k, Order p, Order q) {
  auto l = l_coords(k, p, q);
  if (!l) throw std::invalid_argument("Q(gamma) does not contain cos 2pi/p and cos 2pi/q");
  return checks_with(k, *l);
}

std::vector<EmbeddingCheck> embedding_bounds_check(Order p, Order q, const AlgebraicNumber& gamma,
                                                   const PrecisionPolicy& pol) {
  return embedding_bounds_check(NumberField(gamma, pol), p, q);
}

CriterionReport check_arithmetic_subgroup(const GammaCandidate& cand, const PrecisionPolicy& pol) {
  if (cand.p == kParabolic || cand.q == kParabolic)
    throw RoutingError(RoutingError::Kind::Parabolic, "parabolic generators: use parabolic_check");
  if (cand.p < 2 || cand.q < 2) throw std::invalid_argument("orders must be at least 2");
  const AlgebraicNumber& g = cand.gamma;
  const NumberField k(g, pol);
  CriterionReport r;
  r.integrality = g.is_integral();

  if (g.is_real()) {
    // Real γ belongs to the real-case theory.  Necessary conditions that do
    // not depend on it (integrality, τ(γ) < 0 at the identity) are still
    // reported when they fail.
    const int idx = locate_root(isolate_roots(g.min_poly(), pol), g.box());
    const EmbeddingCheck id = upper_only(g, idx, pol);
    if (r.integrality && id.verdict != Verdict::Fail)
      throw RoutingError(RoutingError::Kind::RealGamma, "real gamma: handled by the real-case (slope 1/2) route");
    fill_field_invariants(r, g.min_poly(), pol);
    r.signature_ok = r.field_signature.complex_places == 1;
    r.embeddings.push_back(id);
    r.embedding_bounds_evaluated = id.verdict == Verdict::Fail;
    r.note = "real gamma; only necessary conditions evaluated";
    return r;
  }

  fill_field_invariants(r, g.min_poly(), pol);
  r.signature_ok = r.field_signature.complex_places == 1;
  const auto l = l_coords(k, cand.p, cand.q);
  r.field_contains_L = l.has_value();
  if (!l) {
    // Condition (3) can still fail through the upper bound alone.
    auto roots = AlgebraicNumber::roots_of(g.min_poly(), pol);
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].is_real()) r.embeddings.push_back(upper_only(roots[i], static_cast<int>(i), pol));
    r.note = "L not contained in Q(gamma); conditions (3) and (4) not evaluated";
    return r;
  }
  r.embeddings = checks_with(k, *l);
  r.embedding_bounds_evaluated = true;
  r.embedding_bounds_ok = true;
  for (const auto& e : r.embeddings) r.embedding_bounds_ok = r.embedding_bounds_ok && e.verdict == Verdict::Pass;
  const FrickeQuadratic fq = fricke_from(k, *l);
  r.fricke_evaluated = true;
  r.fricke_splits = k.sqrt(k.reduce(fq.discriminant())).has_value();
  return r;
}

CriterionReport parabolic_check(const AlgebraicNumber& rho, ParabolicField mode, const PrecisionPolicy& pol) {
  CriterionReport r;
  const AlgebraicNumber gamma = square(rho, pol);
  r.integrality = gamma.is_integral();
  const IntPoly& m = mode == ParabolicField::Rho ? rho.min_poly() : gamma.min_poly();
  fill_field_invariants(r, m, pol);
  r.signature_ok = r.field_signature == Signature{2, 0, 1};
  r.field_contains_L = true;
  r.embedding_bounds_ok = true;
  r.fricke_splits = true;
  r.note = std::string("parabolic pair; field ") + (mode == ParabolicField::Rho ? "Q(rho)" : "Q(gamma)") +
           "; conditions (3) and (4) not applicable";
  return r;
}

}  // namespace heckoid
