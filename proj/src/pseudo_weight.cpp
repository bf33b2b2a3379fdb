#include "crnf/verifier.hpp"

#include <algorithm>

namespace crnf {

PseudoWeightTable::PseudoWeightTable(int k0, int s) : k0_(k0), s_(s), r_(Rational(s - 1, k0 - 1)) {
  if (k0 < 3 || s <= k0) throw Error(ErrorCode::PreconditionViolated, "pseudo-weights need k0 >= 3 and s > k0");
}

Rational PseudoWeightTable::operator()(int gamma, int beta) {
  if (gamma < 0 || beta < 0 || gamma + beta < 1) throw Error(ErrorCode::PreconditionViolated, "pseudo-weight of a constant");
  const auto key = std::make_pair(gamma, beta);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational w = compute(gamma, beta);
  memo_.emplace(key, w);
  return w;
}

Rational PseudoWeightTable::compute(int gamma, int beta) {
  const int d = gamma + beta;
  if (gamma == 0 || beta == 0) return Rational(gamma) + Rational(beta) * r_;
  if (d == k0_ - 1) return Rational(s_ - 1);
  if (d < k0_ - 1) return Rational(k0_ - 1);
  Rational best = Rational(1) + (*this)(gamma - 1, beta);
  if (d > k0_ && beta <= k0_ - 2) best = std::min(best, Rational(gamma + s_ - k0_));
  for (int g1 = 1; g1 <= std::min(gamma, k0_ - 2); ++g1) {
    const int b1 = k0_ - 1 - g1;
    if (b1 > beta) continue;
    best = std::min(best, Rational(s_ - 1) + (*this)(gamma - g1, beta - b1));
  }
  return best;
}

Rational pseudo_weight(PseudoWeightTable& table, int gamma, int beta) { return table(gamma, beta); }

Rational min_pseudo_weight(PseudoWeightTable& table, const Poly& poly) {
  if (poly.is_zero_poly()) throw Error(ErrorCode::ZeroPolynomial, "no support");
  std::optional<Rational> best;
  for (const auto& [e, c] : poly) {
    Rational w = table(e.x, e.y);
    if (!best || w < *best) best = w;
  }
  return *best;
}

}  // namespace crnf
