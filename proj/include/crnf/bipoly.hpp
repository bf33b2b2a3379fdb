#pragma once

#include "crnf/errors.hpp"
#include "crnf/scalar.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <utility>
#include <vector>

namespace crnf {

/// Exponent pair (x, y) of the monomial x^x · y^y.  For surface data the
/// variables are (z, z̄); for map components they are (z, w).
struct Exponent {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Orders monomials by total degree, then by the power of the first variable.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x < b.x;
  }
};

/// Linear grading wt(x^a y^b) = a·wx + b·wy with an inclusive upper bound.
/// Total degree is (1, 1); the normal weight of map components is (1, k0).
struct Grading {
  int wx = 1;
  int wy = 1;
  int bound = INT_MAX;

  long weight(const Exponent& e) const { return long(e.x) * wx + long(e.y) * wy; }
  bool keeps(const Exponent& e) const { return weight(e) <= bound; }
};

inline constexpr int kDegreeOfZero = INT_MIN;

/// Sparse polynomial Σ c_{x,y} X^x Y^y.  Zero coefficients are never stored.
template <typename Scalar>
class BiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, ExponentOrder>;
  using const_iterator = typename Terms::const_iterator;

  BiPoly() = default;

  static BiPoly monomial(int x, int y, Scalar c = Scalar(1)) {
    BiPoly p;
    p.add_term(x, y, std::move(c));
    return p;
  }
  static BiPoly constant(Scalar c) { return monomial(0, 0, std::move(c)); }

  const Scalar& coeff(int x, int y) const {
    static const Scalar zero(0);
    auto it = terms_.find(Exponent{x, y});
    return it == terms_.end() ? zero : it->second;
  }
  const Scalar& coeff(const Exponent& e) const { return coeff(e.x, e.y); }

  void add_term(int x, int y, const Scalar& c) { add_term(Exponent{x, y}, c); }
  void add_term(const Exponent& e, const Scalar& c) {
    if (e.x < 0 || e.y < 0) throw Error(ErrorCode::PreconditionViolated, "negative exponent");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  void set_term(const Exponent& e, const Scalar& c) {
    if (is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = c;
    }
  }

  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  /// Largest total degree in the support; kDegreeOfZero for the zero polynomial.
  int degree() const { return terms_.empty() ? kDegreeOfZero : terms_.rbegin()->first.degree(); }
  int low_degree() const { return terms_.empty() ? kDegreeOfZero : terms_.begin()->first.degree(); }

  bool is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

  BiPoly homogeneous_part(int d) const {
    BiPoly out;
    auto lo = terms_.lower_bound(Exponent{0, d});
    for (auto it = lo; it != terms_.end() && it->first.degree() == d; ++it) out.terms_.insert(*it);
    return out;
  }

  /// Terms with lo <= total degree <= hi.
  BiPoly degree_range(int lo, int hi) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e.degree() >= lo && e.degree() <= hi) out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
  }

  BiPoly filtered(const Grading& g) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
      if (g.keeps(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BiPoly& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend BiPoly operator*(BiPoly a, const Scalar& s) { return a *= s; }
  friend BiPoly operator*(const Scalar& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { return multiply(a, b, Grading{}); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Product keeping only monomials accepted by `g`.  Gradings are monotone,
  /// so factors outside the bound are skipped before multiplying.
  friend BiPoly multiply(const BiPoly& a, const BiPoly& b, const Grading& g) {
    BiPoly out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    std::vector<std::pair<Exponent, const Scalar*>> bt;
    bt.reserve(b.terms_.size());
    long bmin = LONG_MAX;
    for (const auto& [e, c] : b.terms_) {
      bt.emplace_back(e, &c);
      bmin = std::min(bmin, g.weight(e));
    }
    Scalar prod;
    for (const auto& [ea, ca] : a.terms_) {
      const long wa = g.weight(ea);
      if (wa + bmin > g.bound) continue;
      for (const auto& [eb, cb] : bt) {
        if (wa + g.weight(eb) > g.bound) continue;
        prod = ca;
        prod *= *cb;
        const Exponent e{ea.x + eb.x, ea.y + eb.y};
        auto [it, inserted] = out.terms_.try_emplace(e, prod);
        if (!inserted) it->second += prod;
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return is_zero(kv.second); });
    return out;
  }

 private:
  Terms terms_;
};

/// Formal conjugation: swaps the two variables and conjugates coefficients.
template <typename Scalar>
BiPoly<Scalar> conj(const BiPoly<Scalar>& a) {
  BiPoly<Scalar> out;
  for (const auto& [e, c] : a) out.add_term(e.y, e.x, conj(c));
  return out;
}

template <typename Scalar>
BiPoly<Scalar> derivative_x(const BiPoly<Scalar>& a) {
  BiPoly<Scalar> out;
  for (const auto& [e, c] : a) {
    if (e.x > 0) out.add_term(e.x - 1, e.y, c * Scalar(e.x));
  }
  return out;
}

template <typename Scalar>
BiPoly<Scalar> derivative_y(const BiPoly<Scalar>& a) {
  BiPoly<Scalar> out;
  for (const auto& [e, c] : a) {
    if (e.y > 0) out.add_term(e.x, e.y - 1, c * Scalar(e.y));
  }
  return out;
}

/// X^x Y^y · a
template <typename Scalar>
BiPoly<Scalar> shift(const BiPoly<Scalar>& a, int x, int y) {
  BiPoly<Scalar> out;
  for (const auto& [e, c] : a) out.add_term(e.x + x, e.y + y, c);
  return out;
}

template <typename Scalar>
BiPoly<Scalar> power(const BiPoly<Scalar>& a, int n, const Grading& g = Grading{}) {
  BiPoly<Scalar> out = BiPoly<Scalar>::constant(Scalar(1));
  for (int i = 0; i < n; ++i) out = multiply(out, a, g);
  return out;
}

/// A polynomial in (z, z̄) known exactly through total degree `order`.
template <typename Scalar>
class Jet {
 public:
  Jet() = default;
  Jet(BiPoly<Scalar> poly, int order) : poly_(poly.degree_range(0, order)), order_(order) {
    if (order < 0) throw Error(ErrorCode::PreconditionViolated, "negative jet order");
  }

  static Jet variable_x(int order) { return Jet(BiPoly<Scalar>::monomial(1, 0), order); }
  static Jet variable_y(int order) { return Jet(BiPoly<Scalar>::monomial(0, 1), order); }

  const BiPoly<Scalar>& poly() const { return poly_; }
  int order() const { return order_; }

  Jet truncated(int order) const { return Jet(poly_, std::min(order, order_)); }

  friend Jet operator+(const Jet& a, const Jet& b) {
    const int n = std::min(a.order_, b.order_);
    return Jet(a.poly_.degree_range(0, n) + b.poly_.degree_range(0, n), n);
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    const int n = std::min(a.order_, b.order_);
    return Jet(a.poly_.degree_range(0, n) - b.poly_.degree_range(0, n), n);
  }
  friend Jet operator-(const Jet& a) { return Jet(-a.poly_, a.order_); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order_, b.order_);
    Jet out;
    out.order_ = n;
    out.poly_ = multiply(a.poly_, b.poly_, Grading{1, 1, n});
    return out;
  }
  friend Jet operator*(const Scalar& s, const Jet& a) { return Jet(s * a.poly_, a.order_); }
  friend bool operator==(const Jet& a, const Jet& b) { return a.order_ == b.order_ && a.poly_ == b.poly_; }

 private:
  BiPoly<Scalar> poly_;
  int order_ = 0;
};

template <typename Scalar>
Jet<Scalar> conj(const Jet<Scalar>& a) {
  return Jet<Scalar>(conj(a.poly()), a.order());
}

/// Exact product truncated to the smaller operand order.
template <typename Scalar>
Jet<Scalar> poly_mul(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return a * b;
}

template <typename Scalar>
BiPoly<Scalar> poly_conjugate(const BiPoly<Scalar>& a) {
  return conj(a);
}

/// Series Σ h_{k,l} z^k w^l truncated by normal weight k + k0·l <= weight_bound.
template <typename Scalar>
class WJet {
 public:
  WJet() = default;
  WJet(BiPoly<Scalar> terms, int k0, int weight_bound)
      : terms_(terms.filtered(Grading{1, k0, weight_bound})), k0_(k0), weight_bound_(weight_bound) {
    if (k0 < 1) throw Error(ErrorCode::PreconditionViolated, "WJet needs k0 >= 1");
  }

  const BiPoly<Scalar>& terms() const { return terms_; }
  int k0() const { return k0_; }
  int weight_bound() const { return weight_bound_; }
  Grading grading() const { return Grading{1, k0_, weight_bound_}; }
  bool is_zero_series() const { return terms_.is_zero_poly(); }
  long weight(const Exponent& e) const { return grading().weight(e); }

  WJet truncated(int bound) const { return WJet(terms_, k0_, std::min(bound, weight_bound_)); }

  friend WJet operator+(const WJet& a, const WJet& b) {
    check_compatible(a, b);
    return WJet(a.terms_ + b.terms_, a.k0_, std::min(a.weight_bound_, b.weight_bound_));
  }
  friend WJet operator-(const WJet& a, const WJet& b) {
    check_compatible(a, b);
    return WJet(a.terms_ - b.terms_, a.k0_, std::min(a.weight_bound_, b.weight_bound_));
  }
  friend WJet operator*(const WJet& a, const WJet& b) {
    check_compatible(a, b);
    WJet out;
    out.k0_ = a.k0_;
    out.weight_bound_ = std::min(a.weight_bound_, b.weight_bound_);
    out.terms_ = multiply(a.terms_, b.terms_, out.grading());
    return out;
  }
  friend WJet operator*(const Scalar& s, const WJet& a) { return WJet(s * a.terms_, a.k0_, a.weight_bound_); }
  friend bool operator==(const WJet& a, const WJet& b) {
    return a.k0_ == b.k0_ && a.weight_bound_ == b.weight_bound_ && a.terms_ == b.terms_;
  }

 private:
  static void check_compatible(const WJet& a, const WJet& b) {
    if (a.k0_ != b.k0_) throw Error(ErrorCode::PreconditionViolated, "WJet k0 mismatch");
  }

  BiPoly<Scalar> terms_;
  int k0_ = 1;
  int weight_bound_ = 0;
};

/// Splits h by normal weight k + k0·l, ascending.  The components sum to h.
template <typename Scalar>
std::vector<std::pair<int, WJet<Scalar>>> normal_weight_components(const WJet<Scalar>& h) {
  std::map<long, BiPoly<Scalar>> parts;
  for (const auto& [e, c] : h.terms()) parts[h.weight(e)].add_term(e, c);
  std::vector<std::pair<int, WJet<Scalar>>> out;
  for (auto& [w, p] : parts) out.emplace_back(int(w), WJet<Scalar>(std::move(p), h.k0(), h.weight_bound()));
  return out;
}

}  // namespace crnf
