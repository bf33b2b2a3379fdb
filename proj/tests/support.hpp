#pragma once

#include "crnf/io.hpp"

#include <random>

namespace crnf::testing {

using Rng = std::mt19937_64;

template <typename Derived>
bool zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ExactScalar gaussian_int(Rng& rng, int bound = 9) {
  return ExactScalar(Rational(uniform(rng, -bound, bound)), Rational(uniform(rng, -bound, bound)));
}

inline ExactScalar gaussian_rational(Rng& rng) {
  return ExactScalar(Rational(uniform(rng, -9, 9), uniform(rng, 1, 5)), Rational(uniform(rng, -9, 9), uniform(rng, 1, 5)));
}

inline Poly homogeneous(Rng& rng, int degree, int bound = 9) {
  Poly p;
  for (int m = 0; m <= degree; ++m) p.add_term(m, degree - m, gaussian_int(rng, bound));
  return p;
}

inline Poly real_homogeneous(Rng& rng, int degree) {
  Poly p;
  for (int m = 0; m <= degree; ++m) {
    const int n = degree - m;
    if (m > n) continue;
    const ExactScalar c = m == n ? ExactScalar(Rational(uniform(rng, -9, 9))) : gaussian_int(rng);
    p.add_term(m, n, c);
    if (m != n) p.add_term(n, m, conj(c));
  }
  return p;
}

inline Poly sparse(Rng& rng, int lo, int hi, int terms) {
  Poly p;
  for (int i = 0; i < terms; ++i) {
    const int d = uniform(rng, lo, hi);
    const int m = uniform(rng, 0, d);
    p.add_term(m, d - m, gaussian_int(rng));
  }
  return p;
}

inline Poly model_k3() { return Poly::monomial(2, 1) + Poly::monomial(1, 2); }
inline Poly model_k4() { return Poly::monomial(3, 1) + Poly::monomial(1, 3); }

/// w = z²z̄ + zz̄² + z̄⁴ plus up to `terms` random monomials of degree 4..order.
inline SurfaceJet corpus_surface(Rng& rng, int order = 12, int terms = 10) {
  Poly tail = Poly::monomial(0, 4);
  for (int i = 0; i < terms; ++i) {
    const int d = uniform(rng, 4, order);
    const int m = uniform(rng, 0, d);
    if (m == 0 && d == 4) continue;
    tail.add_term(m, d - m, gaussian_int(rng));
  }
  return make_surface(validate_model(model_k3(), 3), order, tail);
}

/// Up to `terms` admissible monomials that matter at the given order.
inline TangentIdentityMap random_map(Rng& rng, int k0, int order, int terms) {
  TangentIdentityMap m = identity_map(k0);
  for (int i = 0; i < terms; ++i) {
    const bool is_f = uniform(rng, 0, 1) == 0;
    const int bound = is_f ? order - k0 + 1 : order;
    const int l = uniform(rng, 0, bound / k0);
    const int kmax = bound - k0 * l;
    if (kmax < 0) continue;
    const Exponent e{uniform(rng, 0, kmax), l};
    if (!admissible(is_f ? MapComponent::F : MapComponent::G, e, k0)) continue;
    (is_f ? m.f : m.g).add_term(e, gaussian_rational(rng));
  }
  return m;
}

}  // namespace crnf::testing
