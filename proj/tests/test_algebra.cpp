#include "support.hpp"

#include <doctest.h>

using namespace crnf;
using namespace crnf::testing;

namespace {

Poly z(int k = 1) { return Poly::monomial(k, 0); }
Poly zb(int k = 1) { return Poly::monomial(0, k); }
Poly zzb(int m, int n, ExactScalar c = ExactScalar(1)) { return Poly::monomial(m, n, c); }
using J = Jet<ExactScalar>;
using W = WJet<ExactScalar>;

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("gaussian rationals are exact and canonical") {
    const ExactScalar a(Rational(2, 4), Rational(-3));
    CHECK(a.real() == Rational(1, 2));
    CHECK(a * conj(a) == ExactScalar(Rational(37, 4)));
    CHECK((a / a) == ExactScalar(1));
    CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
    CHECK(to_string(ExactScalar(Rational(3, 2))) == "3/2");
    CHECK(to_string(-ExactScalar::i()) == "-i");
    CHECK(to_string(ExactScalar(Rational(1, 2), Rational(-3, 4))) == "1/2 - 3/4*i");
  }

  TEST_CASE("parse_rational") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("1.5").has_value());
    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational("--1").has_value());
    CHECK_FALSE(parse_rational("2/").has_value());
  }

  TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(J(z() + zb(), 4), J(z() - zb(), 4)) == J(z(2) - zb(2), 4));
    CHECK(poly_mul(J(z(2), 3), J(z(2), 3)) == J(Poly{}, 3));
    const Poly p = zzb(2, 1) + zzb(1, 2);
    CHECK(poly_mul(J(p, 6), J(p, 6)).poly() == zzb(4, 2) + zzb(3, 3, ExactScalar(2)) + zzb(2, 4));
  }

  TEST_CASE("truncation takes the smaller order") {
    const auto r = poly_mul(J(z() + zb(3), 5), J(z(), 3));
    CHECK(r.order() == 3);
    CHECK(r.poly() == z(2));
  }

  TEST_CASE("poly_conjugate examples") {
    CHECK(poly_conjugate(zzb(2, 1, ExactScalar::i())) == zzb(1, 2, -ExactScalar::i()));
    const Poly p = zzb(2, 1) + zzb(1, 2);
    CHECK(poly_conjugate(p) == p);
  }

  TEST_CASE("zero coefficients are never stored") {
    Poly p = z() + zb();
    p -= zb();
    CHECK(p.size() == 1);
    CHECK(p.coeff(0, 1) == ExactScalar(0));
    CHECK(Poly{}.degree() == kDegreeOfZero);
  }

  TEST_CASE("compose_graph examples") {
    CHECK(compose_graph(W(zzb(0, 2), 2, 100), J(zzb(1, 1), 4), 2).poly() == zzb(2, 2));
    const Poly p = zzb(2, 1) + zzb(1, 2);
    CHECK(compose_graph(W(zzb(1, 0) + zzb(0, 1), 3, 100), J(p, 6), 3).poly() == z() + p);
    const Poly q = p + zb(4);
    CHECK(compose_graph(W(zzb(1, 1), 3, 100), J(q, 5), 3).poly() == zzb(3, 1) + zzb(2, 2) + zzb(1, 4));
    CHECK_THROWS_AS(compose_graph(W(zzb(0, 1), 3, 100), J(zzb(1, 1), 4), 3), Error);
  }

  TEST_CASE("normal_weight_components examples") {
    auto c = normal_weight_components(W(zzb(2, 0) + zzb(1, 1), 3, 100));
    REQUIRE(c.size() == 2);
    CHECK(c[0].first == 2);
    CHECK(c[0].second.terms() == zzb(2, 0));
    CHECK(c[1].first == 4);
    CHECK(c[1].second.terms() == zzb(1, 1));
    auto w = normal_weight_components(W(zzb(0, 1), 3, 100));
    REQUIRE(w.size() == 1);
    CHECK(w[0].first == 3);
    auto merged = normal_weight_components(W(zzb(3, 0) + zzb(0, 1), 3, 100));
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].second.terms() == zzb(3, 0) + zzb(0, 1));
  }

  TEST_CASE("WJet truncates by normal weight") {
    const W h(zzb(4, 0) + zzb(1, 1) + zzb(0, 2), 3, 5);
    CHECK(h.terms() == zzb(4, 0) + zzb(1, 1));
  }

  TEST_CASE("invert_planar_jet examples") {
    CHECK(invert_planar_jet(J(z(), 5), 5).poly() == z());
    CHECK(invert_planar_jet(J(z() + z(2), 3), 3).poly() == z() - z(2) + zzb(3, 0, ExactScalar(2)));
    CHECK_THROWS_AS(invert_planar_jet(J(z(2) + zb(), 3), 3), Error);
    CHECK_THROWS_AS(invert_planar_jet(J(zzb(1, 0, ExactScalar(2)), 3), 3), Error);
    const auto psi = invert_planar_jet(J(z() + zb(2), 3), 3).poly();
    CHECK(substitute(z() + zb(2), psi, conj(psi), 3) == z());
  }

  TEST_CASE("Catalan pattern of z + z^2") {
    const auto psi = invert_planar_jet(J(z() + z(2), 8), 8).poly();
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 1; k <= 8; ++k) CHECK(psi.coeff(k, 0) == ExactScalar((k % 2 ? 1 : -1) * catalan[k - 1]));
  }

  TEST_CASE("ring laws on random jets") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = uniform(rng, 3, 8);
      const J a(sparse(rng, 0, n, 5), n), b(sparse(rng, 0, n, 5), n), c(sparse(rng, 0, n, 5), n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(conj(conj(a)) == a);
      CHECK(conj(a * b) == conj(a) * conj(b));
    }
  }

  TEST_CASE("compose_graph is linear in h") {
    Rng rng(12);
    const Poly q = zzb(2, 1) + zzb(1, 2) + zb(4);
    for (int trial = 0; trial < 20; ++trial) {
      const W h1(sparse(rng, 1, 4, 4), 3, 10), h2(sparse(rng, 1, 4, 4), 3, 10);
      CHECK(compose_graph(h1 + h2, J(q, 9), 3) == compose_graph(h1, J(q, 9), 3) + compose_graph(h2, J(q, 9), 3));
    }
  }

  TEST_CASE("normal weight components reassemble") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const W h(sparse(rng, 0, 6, 6), 3, 12);
      Poly sum;
      for (const auto& [w, c] : normal_weight_components(h)) sum += c.terms();
      CHECK(sum == h.terms());
    }
  }

  TEST_CASE("bareiss solver reports rank and consistency") {
    Matrix<Rational> a(3, 3);
    a << 2, 1, 1, 4, 3, 3, 8, 7, 9;
    Matrix<Rational> b(3, 1);
    b << 4, 10, 24;
    auto sol = bareiss_solve(a, b);
    CHECK(sol.unique());
    CHECK(zero_matrix(Matrix<Rational>(a * sol.x - b)));

    Matrix<Rational> s(2, 2);
    s << 1, 2, 2, 4;
    Matrix<Rational> c(2, 1);
    c << 1, 3;
    auto bad = bareiss_solve(s, c);
    CHECK(bad.rank == 1);
    CHECK_FALSE(bad.consistent);
    c << 1, 2;
    auto under = bareiss_solve(s, c);
    CHECK(under.consistent);
    CHECK_FALSE(under.unique());
    CHECK(under.x(1, 0) == 0);
  }

  TEST_CASE("bareiss over gaussian rationals with several right sides") {
    Matrix<ExactScalar> a(2, 2);
    a << ExactScalar(10), ExactScalar(4), ExactScalar(4), ExactScalar(10);
    Matrix<ExactScalar> b(2, 2);
    b << ExactScalar(6), ExactScalar::i(), ExactScalar(0), ExactScalar(1);
    auto sol = bareiss_solve(a, b);
    REQUIRE(sol.unique());
    CHECK(sol.x(0, 0) == ExactScalar(Rational(5, 7)));
    CHECK(sol.x(1, 0) == ExactScalar(Rational(-2, 7)));
    CHECK(zero_matrix(Matrix<ExactScalar>(a * sol.x - b)));
  }
}
