#include "crnf/verifier.hpp"

#include <gmp.h>

namespace crnf {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

std::optional<Integer> exact_root(const Integer& x, int n) {
  Integer r;
  if (mpz_root(r.backend().data(), x.backend().data(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  return r;
}

/// Positive rational ρ with ρ^n = q, if one exists.
std::optional<Rational> rational_root(const Rational& q, int n) {
  if (q <= 0) return std::nullopt;
  auto num = exact_root(numerator(q), n);
  auto den = exact_root(denominator(q), n);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::string first_difference(const Poly& a, const Poly& b) {
  const Poly d = a - b;
  if (d.is_zero_poly()) return "normal forms agree";
  const auto& [e, c] = *d.begin();
  return "normal forms differ at z^" + std::to_string(e.x) + " zbar^" + std::to_string(e.y) + ": " +
         to_string(a.coeff(e)) + " vs " + to_string(b.coeff(e));
}

}  // namespace

EquivalenceResult equiv_check(const SurfaceJet& a, const SurfaceJet& b, EquivMode mode) {
  if (a.k0() != b.k0() || a.order != b.order) throw Error(ErrorCode::OrderMismatch, "surfaces differ in k0 or order");
  EquivalenceResult out;
  const auto ia = surface_invariants(a);
  const auto ib = surface_invariants(b);
  if (!ia.nondegenerate || !ib.nondegenerate) throw Error(ErrorCode::NondegeneracyViolated, "equivalence needs nondegenerate surfaces");
  if (*ia.s != *ib.s) {
    out.verdict = Verdict::Inequivalent;
    out.certificate.push_back("s differs: " + std::to_string(*ia.s) + " vs " + std::to_string(*ib.s));
    return out;
  }
  if (ia.alpha != ib.alpha) {
    out.verdict = Verdict::Inequivalent;
    out.certificate.push_back("alpha differs: " + to_string(ia.alpha) + " vs " + to_string(ib.alpha));
    return out;
  }
  if (a.model.poly != b.model.poly) {
    if (mode == EquivMode::Tangent) {
      out.verdict = Verdict::Inequivalent;
      out.certificate.push_back("models differ and tangent-to-identity maps fix the model");
    } else {
      out.verdict = Verdict::Undecided;
      out.certificate.push_back("models differ; only linear parts fixing a common model are searched");
    }
    return out;
  }
  out.normal_a = normalize(a);
  out.normal_b = normalize(b);
  const Poly& ta = out.normal_a->normal_form.tail;
  const Poly& tb = out.normal_b->normal_form.tail;
  if (ta == tb) {
    out.verdict = Verdict::Equivalent;
    out.certificate.push_back("normal forms agree under tangent-to-identity maps");
    return out;
  }
  if (mode == EquivMode::Tangent) {
    out.verdict = Verdict::Inequivalent;
    out.certificate.push_back(first_difference(ta, tb));
    return out;
  }

  const int k0 = a.k0();
  const int s = *ia.s;
  const auto cons = linear_automorphism_constraints(a.model);
  const Rational qa = norm_squared(ta.coeff(0, s));
  const Rational qb = norm_squared(tb.coeff(0, s));
  // |b_{0,s}| = ρ^{k0-s}·|a_{0,s}|
  const auto rho = rational_root(qa / qb, 2 * (s - k0));
  if (!rho) {
    out.verdict = Verdict::Undecided;
    out.certificate.push_back("dilation rho solves rho^" + std::to_string(2 * (s - k0)) + " = " + to_string(Rational(qa / qb)) +
                              " with no rational root");
    return out;
  }
  for (const auto& ph : cons.exact_phases) {
    ExactScalar zeta(1);
    for (int q = 0; q < ph.quarter_turns; ++q) zeta *= ExactScalar::i();
    const ExactScalar lambda = ExactScalar(*rho) * zeta;
    const auto g01 = linear_automorphism_factor(a.model, lambda);
    if (!g01) continue;
    if (scale_tail(ta, lambda, *g01) == tb) {
      out.verdict = Verdict::Equivalent;
      out.certificate.push_back("linear part f10 = " + to_string(lambda) + ", g01 = " + to_string(*g01));
      return out;
    }
    out.certificate.push_back("f10 = " + to_string(lambda) + " rejected");
  }
  if (cons.inexact_phase_count != 0) {
    out.verdict = Verdict::Undecided;
    out.certificate.push_back(std::to_string(cons.inexact_phase_count) + " admissible phases lie outside Q(i)");
    return out;
  }
  out.verdict = Verdict::Inequivalent;
  out.certificate.push_back(first_difference(ta, tb));
  return out;
}

}  // namespace crnf
