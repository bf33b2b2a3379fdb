#include "crnf/scalar.hpp"

#include <cctype>

namespace crnf {

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool neg = false;
  if (!text.empty() && text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const ExactScalar& c) {
  if (c.imag() == 0) return to_string(c.real());
  std::string im;
  if (c.imag() == 1) {
    im = "i";
  } else if (c.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(c.imag()) + "*i";
  }
  if (c.real() == 0) return im;
  if (im.front() == '-') return to_string(c.real()) + " - " + im.substr(1);
  return to_string(c.real()) + " + " + im;
}

}  // namespace crnf
