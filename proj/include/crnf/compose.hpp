#pragma once

#include "crnf/bipoly.hpp"

#include <vector>

namespace crnf {

/// Σ h_{k,l} z^k q^l truncated to q.order().  Requires q to vanish below
/// total degree k0, so that z^k w^l lands in degree >= k + k0·l.
template <typename Scalar>
Jet<Scalar> compose_graph(const WJet<Scalar>& h, const Jet<Scalar>& q, int k0) {
  if (!q.poly().is_zero_poly() && q.poly().low_degree() < k0) {
    throw Error(ErrorCode::DegreeViolation, "graph function has terms below degree k0");
  }
  const int order = q.order();
  const Grading g{1, 1, order};
  int lmax = 0;
  for (const auto& [e, c] : h.terms()) {
    if (e.x + long(k0) * e.y <= order) lmax = std::max(lmax, e.y);
  }
  std::vector<BiPoly<Scalar>> qpow{BiPoly<Scalar>::constant(Scalar(1))};
  for (int l = 1; l <= lmax; ++l) qpow.push_back(multiply(qpow.back(), q.poly(), g));

  BiPoly<Scalar> out;
  for (const auto& [e, c] : h.terms()) {
    if (e.x + long(k0) * e.y > order) continue;
    for (const auto& [eq, cq] : qpow[e.y]) {
      if (eq.degree() + e.x <= order) out.add_term(eq.x + e.x, eq.y, c * cq);
    }
  }
  return Jet<Scalar>(std::move(out), order);
}

/// W(u, v) for W = Σ c_{m,n} x^m y^n, keeping only terms accepted by `g`.
/// u and v must have positive weight.  Horner in v over cached powers of u.
template <typename Scalar>
BiPoly<Scalar> substitute(const BiPoly<Scalar>& w, const BiPoly<Scalar>& u, const BiPoly<Scalar>& v, const Grading& g) {
  if (w.is_zero_poly()) return {};
  auto low = [&](const BiPoly<Scalar>& x) {
    long m = long(g.bound) + 1;
    for (const auto& [e, c] : x) m = std::min(m, g.weight(e));
    return m;
  };
  const long ulow = low(u);
  const long vlow = low(v);
  if (ulow <= 0 || vlow <= 0) throw Error(ErrorCode::PreconditionViolated, "substituted series must vanish at the origin");
  int mmax = 0;
  int nmax = 0;
  for (const auto& [e, c] : w) {
    mmax = std::max(mmax, e.x);
    nmax = std::max(nmax, e.y);
  }
  std::vector<BiPoly<Scalar>> upow{BiPoly<Scalar>::constant(Scalar(1))};
  for (int m = 1; m <= mmax && m * ulow <= g.bound; ++m) upow.push_back(multiply(upow.back(), u, g));

  std::vector<BiPoly<Scalar>> rows(nmax + 1);
  for (const auto& [e, c] : w) {
    if (e.x >= int(upow.size())) continue;
    for (const auto& [eu, cu] : upow[e.x]) rows[e.y].add_term(eu, c * cu);
  }
  BiPoly<Scalar> acc;
  for (int n = nmax; n >= 0; --n) {
    // n further factors of v still follow, each worth at least vlow
    Grading room = g;
    room.bound = int(std::max<long>(-1, g.bound - n * vlow));
    if (!acc.is_zero_poly()) acc = multiply(acc, v, room);
    acc += rows[n].filtered(room);
  }
  return acc.filtered(g);
}

template <typename Scalar>
BiPoly<Scalar> substitute(const BiPoly<Scalar>& w, const BiPoly<Scalar>& u, const BiPoly<Scalar>& v, int order) {
  return substitute(w, u, v, Grading{1, 1, order});
}

/// Inverse of the planar map (z, z̄) ↦ (phi, conj phi) through `order`.
template <typename Scalar>
Jet<Scalar> invert_planar_jet(const Jet<Scalar>& phi, int order) {
  const auto& p = phi.poly();
  if (!is_zero(p.coeff(0, 0)) || p.coeff(1, 0) != Scalar(1) || !is_zero(p.coeff(0, 1))) {
    throw Error(ErrorCode::NotTangentToIdentity, "linear part of phi is not z");
  }
  const auto z = BiPoly<Scalar>::monomial(1, 0);
  const BiPoly<Scalar> f = p.degree_range(2, order);
  BiPoly<Scalar> psi = z;
  if (f.is_zero_poly()) return Jet<Scalar>(psi, order);
  const int gain = f.low_degree() - 1;
  for (int exact = gain; exact < order;) {
    exact = std::min(order, exact + gain);
    psi = z - substitute(f, psi, conj(psi), exact);
  }
  return Jet<Scalar>(psi, order);
}

}  // namespace crnf
