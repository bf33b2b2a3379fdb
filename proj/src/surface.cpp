#include "crnf/surface.hpp"

#include <numeric>
#include <set>

namespace crnf {

const char* violation_name(ModelViolation v) {
  switch (v) {
    case ModelViolation::NotHomogeneous: return "not_homogeneous";
    case ModelViolation::NotRealValued: return "not_real_valued";
    case ModelViolation::PureTermPresent: return "pure_term_present";
    case ModelViolation::LeadingNotOne: return "p_1_k0m1_not_one";
  }
  return "unknown";
}

const char* degeneracy_name(Degeneracy d) {
  switch (d) {
    case Degeneracy::NoSWithinTruncation: return "NO_S_WITHIN_TRUNCATION";
    case Degeneracy::AlphaZero: return "ALPHA_ZERO";
    case Degeneracy::AlphaEqualsS: return "ALPHA_EQUALS_S";
    case Degeneracy::AlphaSquaredZero: return "ALPHA_SQUARED_ZERO";
    case Degeneracy::AlphaSquaredEqualsS: return "ALPHA_SQUARED_EQUALS_S";
  }
  return "unknown";
}

bool is_real_valued(const Poly& p) { return p == conj(p); }

std::vector<ModelViolation> model_violations(const Poly& poly, int k0) {
  std::vector<ModelViolation> out;
  if (k0 < 3) {
    out.push_back(ModelViolation::NotHomogeneous);
    return out;
  }
  if (poly.is_zero_poly() || !poly.is_homogeneous() || poly.degree() != k0) out.push_back(ModelViolation::NotHomogeneous);
  if (!is_real_valued(poly)) out.push_back(ModelViolation::NotRealValued);
  if (!is_zero(poly.coeff(k0, 0)) || !is_zero(poly.coeff(0, k0))) out.push_back(ModelViolation::PureTermPresent);
  if (poly.coeff(1, k0 - 1) != ExactScalar(1)) out.push_back(ModelViolation::LeadingNotOne);
  return out;
}

ModelPolynomial validate_model(const Poly& poly, int k0) {
  const auto v = model_violations(poly, k0);
  if (!v.empty()) {
    std::string msg;
    for (auto x : v) msg += std::string(msg.empty() ? "" : ", ") + violation_name(x);
    throw Error(ErrorCode::ModelInvalid, msg);
  }
  return ModelPolynomial{k0, poly};
}

SurfaceJet make_surface(ModelPolynomial model, int order, Poly tail) {
  if (order < model.k0 + 1) throw Error(ErrorCode::DegreeViolation, "order must exceed k0");
  for (const auto& [e, c] : tail) {
    if (e.degree() <= model.k0 || e.degree() > order) {
      throw Error(ErrorCode::DegreeViolation,
                  "tail term z^" + std::to_string(e.x) + " zbar^" + std::to_string(e.y) + " outside degrees k0+1..order");
    }
  }
  return SurfaceJet{std::move(model), order, std::move(tail)};
}

SurfaceJet truncate_surface(const SurfaceJet& s, int order) {
  return SurfaceJet{s.model, order, s.tail.degree_range(0, order)};
}

FischerSplit<ExactScalar> alpha_split(const ModelPolynomial& model) {
  const Poly zpz = shift(derivative_x(model.poly), 1, 0);
  return fischer_decompose(model.poly, zpz);
}

SurfaceInvariants surface_invariants(const SurfaceJet& surface) {
  SurfaceInvariants out;
  for (int l = surface.k0() + 1; l <= surface.order; ++l) {
    if (!is_zero(surface.tail.coeff(0, l))) {
      out.s = l;
      break;
    }
  }
  const auto split = alpha_split(surface.model);
  out.alpha = split.quotient.coeff(0, 0);
  out.alpha_remainder = split.remainder;
  if (!out.s) {
    out.reasons.push_back(Degeneracy::NoSWithinTruncation);
  } else {
    const ExactScalar s(*out.s);
    const ExactScalar a2 = out.alpha * out.alpha;
    if (is_zero(out.alpha)) out.reasons.push_back(Degeneracy::AlphaZero);
    if (out.alpha == s) out.reasons.push_back(Degeneracy::AlphaEqualsS);
    if (is_zero(a2)) out.reasons.push_back(Degeneracy::AlphaSquaredZero);
    if (a2 == s) out.reasons.push_back(Degeneracy::AlphaSquaredEqualsS);
  }
  out.nondegenerate = out.reasons.empty();
  return out;
}

bool admissible(MapComponent c, const Exponent& e, int k0) {
  if (e.x < 0 || e.y < 0) return false;
  const long w = normal_weight(e, k0);
  return c == MapComponent::F ? w >= 2 : w >= k0 + 1;
}

void check_admissible(const TangentIdentityMap& m) {
  for (const auto& [e, c] : m.f) {
    if (!admissible(MapComponent::F, e, m.k0)) {
      throw Error(ErrorCode::InadmissibleMonomial, "f term z^" + std::to_string(e.x) + " w^" + std::to_string(e.y));
    }
  }
  for (const auto& [e, c] : m.g) {
    if (!admissible(MapComponent::G, e, m.k0)) {
      throw Error(ErrorCode::InadmissibleMonomial, "g term z^" + std::to_string(e.x) + " w^" + std::to_string(e.y));
    }
  }
}

TangentIdentityMap identity_map(int k0) { return TangentIdentityMap{k0, {}, {}}; }

TangentIdentityMap truncate_map(const TangentIdentityMap& m, int order) {
  return TangentIdentityMap{m.k0, m.f.filtered(Grading{1, m.k0, order - m.k0 + 1}),
                            m.g.filtered(Grading{1, m.k0, order})};
}

SurfaceJet apply_map(const TangentIdentityMap& map, const SurfaceJet& surface) {
  const int k0 = surface.k0();
  if (map.k0 != k0) throw Error(ErrorCode::PreconditionViolated, "map and surface disagree on k0");
  check_admissible(map);
  const int n = surface.order;
  const int nf = n - k0 + 1;
  const Poly q = surface.graph();
  const SurfaceJetPoly qj(q, n);
  Poly w = q + compose_graph(WJet<ExactScalar>(map.g, k0, n), qj, k0).poly();
  if (!map.f.filtered(Grading{1, k0, nf}).is_zero_poly()) {
    const auto f = compose_graph(WJet<ExactScalar>(map.f, k0, nf), SurfaceJetPoly(q, nf), k0);
    const auto psi = invert_planar_jet(SurfaceJetPoly::variable_x(nf) + f, nf).poly();
    w = substitute(w, psi, conj(psi), n);
  }
  if (w.degree_range(0, k0) != surface.model.poly) {
    throw Error(ErrorCode::DegreeViolation, "map changed the degree <= k0 part");
  }
  return SurfaceJet{surface.model, n, w.degree_range(k0 + 1, n)};
}

TangentIdentityMap compose_maps(const TangentIdentityMap& first, const TangentIdentityMap& second, int order) {
  if (first.k0 != second.k0) throw Error(ErrorCode::PreconditionViolated, "maps disagree on k0");
  const int k0 = first.k0;
  const Grading gf{1, k0, order - k0 + 1};
  const Grading gg{1, k0, order};
  const auto a = truncate_map(first, order);
  const auto b = truncate_map(second, order);
  const Poly u = Poly::monomial(1, 0) + a.f;
  const Poly v = Poly::monomial(0, 1) + a.g;
  TangentIdentityMap out{k0, a.f, a.g};
  out.f += substitute(b.f, u, v, gf);
  out.g += substitute(b.g, u, v, gg);
  return truncate_map(out, order);
}

namespace {

ExactScalar ipow(const ExactScalar& x, int n) {
  ExactScalar r(1);
  ExactScalar b = x;
  if (n < 0) {
    b = ExactScalar(1) / x;
    n = -n;
  }
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

LinearConstraints linear_automorphism_constraints(const ModelPolynomial& model) {
  LinearConstraints out;
  std::set<int> ds;
  for (const auto& [e, c] : model.poly) ds.insert(e.x - e.y);
  std::set<int> diffs;
  for (int a : ds) {
    for (int b : ds) {
      if (a > b) diffs.insert(a - b);
    }
  }
  out.differences.assign(diffs.begin(), diffs.end());
  for (int d : diffs) out.gcd = std::gcd(out.gcd, d);
  const int d0 = *ds.begin();
  int exact = 0;
  if (out.gcd == 0) {
    // a single difference class leaves the phase unconstrained
    out.inexact_phase_count = -1;
  }
  for (int q = 0; q < 4; ++q) {
    if (out.gcd != 0 && (q * out.gcd) % 4 != 0) continue;
    const int t = ((q * d0) % 4 + 4) % 4;
    if (t % 2 != 0) continue;
    out.exact_phases.push_back(Phase{q, t == 0 ? 1 : -1});
    ++exact;
  }
  if (out.gcd != 0) out.inexact_phase_count = out.gcd - exact;
  return out;
}

std::optional<ExactScalar> linear_automorphism_factor(const ModelPolynomial& model, const ExactScalar& lambda) {
  if (lambda.is_zero()) return std::nullopt;
  std::optional<ExactScalar> g;
  const ExactScalar lb = conj(lambda);
  for (const auto& [e, c] : model.poly) {
    const ExactScalar ratio = ipow(lambda, e.x) * ipow(lb, e.y);
    if (!g) {
      g = ratio;
    } else if (*g != ratio) {
      return std::nullopt;
    }
  }
  if (g && !g->is_real()) return std::nullopt;
  return g;
}

Poly scale_tail(const Poly& tail, const ExactScalar& lambda, const ExactScalar& g01) {
  Poly out;
  const ExactScalar lb = conj(lambda);
  for (const auto& [e, c] : tail) out.add_term(e, g01 * ipow(lambda, -e.x) * ipow(lb, -e.y) * c);
  return out;
}

}  // namespace crnf
