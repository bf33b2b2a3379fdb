#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace crnf {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Complex number a + b·i over an exact real field.
///
/// All arithmetic is exact; with Real = Rational the parts are kept in lowest
/// terms by GMP, so structural equality is value equality.
template <typename Real>
class Gaussian {
 public:
  using RealScalar = Real;

  Gaussian() = default;
  Gaussian(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Real re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Real(0), Real(1)); }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Real re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Real den = o.re_ * o.re_ + o.im_ * o.im_;
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    im_ = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

 private:
  Real re_{0};
  Real im_{0};
};

using ExactScalar = Gaussian<Rational>;

template <typename Real>
Gaussian<Real> conj(const Gaussian<Real>& a) {
  return Gaussian<Real>(a.real(), -a.imag());
}
inline const Rational& conj(const Rational& a) { return a; }

template <typename Real>
const Real& real(const Gaussian<Real>& a) {
  return a.real();
}
template <typename Real>
const Real& imag(const Gaussian<Real>& a) {
  return a.imag();
}

template <typename Real>
Real real_part(const Gaussian<Real>& a) {
  return a.real();
}
inline const Rational& real_part(const Rational& a) { return a; }

template <typename Real>
Real norm_squared(const Gaussian<Real>& a) {
  return a.real() * a.real() + a.imag() * a.imag();
}

template <typename Real>
bool is_zero(const Gaussian<Real>& a) {
  return a.is_zero();
}
inline bool is_zero(const Rational& a) { return a == 0; }

Integer factorial(int n);

/// Parses "p", "-p" or "p/q" with q != 0. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Human-readable form such as "3/2", "-i", "1/2 + 3/4*i".
std::string to_string(const ExactScalar& c);

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& c) { return os << to_string(c); }

}  // namespace crnf

namespace Eigen {

template <>
struct NumTraits<crnf::Rational> : GenericNumTraits<crnf::Rational> {
  using Real = crnf::Rational;
  using NonInteger = crnf::Rational;
  using Nested = crnf::Rational;
  using Literal = crnf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<crnf::ExactScalar> : GenericNumTraits<crnf::ExactScalar> {
  using Real = crnf::Rational;
  using NonInteger = crnf::ExactScalar;
  using Nested = crnf::ExactScalar;
  using Literal = crnf::ExactScalar;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
