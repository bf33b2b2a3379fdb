#pragma once

#include "crnf/bipoly.hpp"
#include "crnf/linalg.hpp"

#include <map>
#include <vector>

namespace crnf {

template <typename Scalar>
Scalar factorial_weight(const Exponent& e) {
  return Scalar(Rational(factorial(e.x) * factorial(e.y)));
}

/// ⟨a, b⟩ = Σ m!·n!·a_{m,n}·conj(b_{m,n})
template <typename Scalar>
Scalar fischer_inner(const BiPoly<Scalar>& a, const BiPoly<Scalar>& b) {
  Scalar acc(0);
  const auto& small = a.size() <= b.size() ? a : b;
  for (const auto& [e, c] : small) {
    const Scalar& ca = a.coeff(e);
    const Scalar& cb = b.coeff(e);
    if (is_zero(ca) || is_zero(cb)) continue;
    acc += factorial_weight<Scalar>(e) * ca * conj(cb);
  }
  return acc;
}

inline Integer falling(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

/// P*(q) = Σ conj(p_{m,n}) ∂^{m+n} q / ∂z^m ∂z̄^n
template <typename Scalar>
BiPoly<Scalar> adjoint_apply(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q) {
  if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "adjoint operator needs a homogeneous symbol");
  BiPoly<Scalar> out;
  for (const auto& [ep, cp] : p) {
    const Scalar cc = conj(cp);
    for (const auto& [eq, cq] : q) {
      if (eq.x < ep.x || eq.y < ep.y) continue;
      const Scalar w(Rational(falling(eq.x, ep.x) * falling(eq.y, ep.y)));
      out.add_term(eq.x - ep.x, eq.y - ep.y, cc * cq * w);
    }
  }
  return out;
}

template <typename Scalar>
struct FischerSplit {
  BiPoly<Scalar> quotient;
  BiPoly<Scalar> remainder;
};

template <typename Scalar>
std::vector<BiPoly<Scalar>> homogeneous_basis(int d) {
  std::vector<BiPoly<Scalar>> out;
  for (int j = 0; j <= d; ++j) out.push_back(BiPoly<Scalar>::monomial(d - j, j));
  return out;
}

template <typename Scalar>
Matrix<Scalar> fischer_gram(const BiPoly<Scalar>& p, int quotient_degree) {
  const auto basis = homogeneous_basis<Scalar>(quotient_degree);
  std::vector<BiPoly<Scalar>> images;
  for (const auto& m : basis) images.push_back(p * m);
  const auto n = Eigen::Index(basis.size());
  Matrix<Scalar> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = fischer_inner(images[j], images[i]);
  }
  return g;
}

template <typename Scalar>
void check_decomposable(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q) {
  if (p.is_zero_poly()) throw Error(ErrorCode::ZeroModel, "cannot decompose against zero");
  if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "model is not homogeneous");
  if (!q.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "input is not homogeneous");
}

template <typename Scalar>
FischerSplit<Scalar> split_with_quotient(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q, const Matrix<Scalar>& coeffs) {
  FischerSplit<Scalar> out;
  const int d = int(coeffs.rows()) - 1;
  for (int j = 0; j <= d; ++j) out.quotient.add_term(d - j, j, coeffs(j, 0));
  out.remainder = q - out.quotient * p;
  return out;
}

/// q = S·p + T with P*(T) = 0, by an exact solve of the Fischer Gram system.
template <typename Scalar>
FischerSplit<Scalar> fischer_decompose(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q) {
  check_decomposable(p, q);
  const int k0 = p.degree();
  if (q.is_zero_poly() || q.degree() < k0) return {BiPoly<Scalar>{}, q};
  const int d = q.degree() - k0;
  const auto basis = homogeneous_basis<Scalar>(d);
  Matrix<Scalar> rhs(Eigen::Index(basis.size()), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) rhs(Eigen::Index(i), 0) = fischer_inner(q, p * basis[i]);
  auto sol = bareiss_solve(fischer_gram(p, d), rhs);
  if (!sol.unique()) throw Error(ErrorCode::ZeroModel, "singular Fischer Gram matrix");
  return split_with_quotient(p, q, sol.x);
}

/// Same splitting with the inverse Gram matrix kept per degree.
template <typename Scalar>
class FischerDecomposer {
 public:
  explicit FischerDecomposer(BiPoly<Scalar> p) : p_(std::move(p)) { check_decomposable(p_, BiPoly<Scalar>{}); }

  const BiPoly<Scalar>& model() const { return p_; }

  FischerSplit<Scalar> operator()(const BiPoly<Scalar>& q) {
    check_decomposable(p_, q);
    const int k0 = p_.degree();
    if (q.is_zero_poly() || q.degree() < k0) return {BiPoly<Scalar>{}, q};
    const int d = q.degree() - k0;
    auto it = inverse_.find(d);
    if (it == inverse_.end()) {
      const auto n = Eigen::Index(d + 1);
      auto sol = bareiss_solve(fischer_gram(p_, d), Matrix<Scalar>(Matrix<Scalar>::Identity(n, n)));
      if (!sol.unique()) throw Error(ErrorCode::ZeroModel, "singular Fischer Gram matrix");
      it = inverse_.emplace(d, std::move(sol.x)).first;
    }
    const auto& inv = it->second;
    Matrix<Scalar> rhs(d + 1, 1);
    for (int i = 0; i <= d; ++i) {
      Scalar acc(0);
      // ⟨q, p·m_i⟩ with m_i = z^{d-i} z̄^i
      for (const auto& [ep, cp] : p_) {
        const Exponent e{ep.x + d - i, ep.y + i};
        const Scalar& cq = q.coeff(e);
        if (!is_zero(cq)) acc += factorial_weight<Scalar>(e) * cq * conj(cp);
      }
      rhs(i, 0) = acc;
    }
    Matrix<Scalar> x(d + 1, 1);
    for (int j = 0; j <= d; ++j) {
      Scalar acc(0);
      for (int i = 0; i <= d; ++i) {
        if (!is_zero(rhs(i, 0)) && !is_zero(inv(j, i))) acc += inv(j, i) * rhs(i, 0);
      }
      x(j, 0) = acc;
    }
    return split_with_quotient(p_, q, x);
  }

 private:
  BiPoly<Scalar> p_;
  std::map<int, Matrix<Scalar>> inverse_;
};

/// levels[j] = (S_j, T_j) with S_0 = q, T_0 = 0 and S_j = S_{j+1}·p + T_{j+1}.
template <typename Scalar>
struct ChainDecomposition {
  int degree = 0;
  std::vector<BiPoly<Scalar>> quotients;
  std::vector<BiPoly<Scalar>> remainders;
  std::size_t size() const { return quotients.size(); }
};

template <typename Scalar, typename Split>
ChainDecomposition<Scalar> iterated_chain_with(Split&& split, int k0, const BiPoly<Scalar>& q, int degree) {
  ChainDecomposition<Scalar> out;
  out.degree = degree;
  out.quotients.push_back(q);
  out.remainders.emplace_back();
  for (int d = degree; d >= k0; d -= k0) {
    auto s = split(out.quotients.back());
    out.quotients.push_back(std::move(s.quotient));
    out.remainders.push_back(std::move(s.remainder));
  }
  return out;
}

/// Chain for a homogeneous q of the given degree (q may be zero).
template <typename Scalar>
ChainDecomposition<Scalar> iterated_chain(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q, int degree) {
  check_decomposable(p, q);
  if (!q.is_zero_poly() && q.degree() != degree) throw Error(ErrorCode::NotHomogeneous, "input degree mismatch");
  return iterated_chain_with(
      [&](const BiPoly<Scalar>& x) { return fischer_decompose(p, x); }, p.degree(), q, degree);
}

template <typename Scalar>
ChainDecomposition<Scalar> iterated_chain(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q) {
  if (q.is_zero_poly()) throw Error(ErrorCode::ZeroPolynomial, "chain degree of zero is undefined");
  return iterated_chain(p, q, q.degree());
}

/// z-pure entries for j = 0..J, then z̄-pure entries for j = 1..J.
template <typename Scalar>
std::vector<Scalar> residual_from_chain(const ChainDecomposition<Scalar>& chain, int k0) {
  std::vector<Scalar> out;
  const int levels = int(chain.size());
  for (int j = 0; j < levels; ++j) out.push_back(chain.quotients[j].coeff(chain.degree - j * k0, 0));
  for (int j = 1; j < levels; ++j) out.push_back(chain.quotients[j].coeff(0, chain.degree - j * k0));
  return out;
}

template <typename Scalar>
std::vector<Scalar> sN_residual(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q, int degree) {
  if (degree < p.degree() + 1) throw Error(ErrorCode::PreconditionViolated, "residual needs degree > k0");
  return residual_from_chain(iterated_chain(p, q, degree), p.degree());
}

template <typename Scalar>
std::vector<Scalar> sN_residual(const BiPoly<Scalar>& p, const BiPoly<Scalar>& q) {
  if (q.is_zero_poly()) throw Error(ErrorCode::ZeroPolynomial, "residual degree of zero is undefined");
  return sN_residual(p, q, q.degree());
}

template <typename Scalar>
bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

extern template class FischerDecomposer<ExactScalar>;
extern template ExactScalar fischer_inner(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
extern template BiPoly<ExactScalar> adjoint_apply(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
extern template FischerSplit<ExactScalar> fischer_decompose(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
extern template ChainDecomposition<ExactScalar> iterated_chain(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&, int);
extern template std::vector<ExactScalar> sN_residual(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&, int);

}  // namespace crnf
