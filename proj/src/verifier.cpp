#include "crnf/verifier.hpp"

namespace crnf {

std::vector<int> resonant_degrees(int k0, int s, int order) {
  std::vector<int> out;
  for (int k = k0 + 1; k <= order; ++k) {
    if ((k % s == (k0 - 1) % s && k >= s + k0 - 1) || (k % s == 0 && k >= 2 * s)) out.push_back(k);
  }
  return out;
}

VerificationReport verify_normal_form(const SurfaceJet& surface) {
  VerificationReport rep;
  rep.overall = true;
  const auto& p = surface.model.poly;
  for (int T = surface.k0() + 1; T <= surface.order; ++T) {
    DegreeCheck d;
    d.T = T;
    d.residual = sN_residual(p, surface.tail.homogeneous_part(T), T);
    d.pass = all_zero(d.residual);
    rep.overall = rep.overall && d.pass;
    rep.per_degree.push_back(std::move(d));
  }
  std::optional<int> s;
  for (int l = surface.k0() + 1; l <= surface.order && !s; ++l) {
    if (!is_zero(surface.tail.coeff(0, l))) s = l;
  }
  rep.resonance_applicable = s.has_value();
  if (s) {
    for (int k : resonant_degrees(surface.k0(), *s, surface.order)) {
      TargetCheck t{k, surface.tail.coeff(0, k), false};
      t.pass = is_zero(t.coefficient);
      rep.overall = rep.overall && t.pass;
      rep.resonance_targets.push_back(t);
    }
  }
  return rep;
}

}  // namespace crnf
