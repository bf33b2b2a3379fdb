#include "support.hpp"

#include <doctest.h>

using namespace crnf;
using namespace crnf::testing;

namespace {

Poly m(int a, int b, ExactScalar c = ExactScalar(1)) { return Poly::monomial(a, b, c); }
ExactScalar q(long p, long d = 1) { return ExactScalar(Rational(p, d)); }
std::vector<Exponent> ex(std::initializer_list<std::pair<int, int>> l) {
  std::vector<Exponent> out;
  for (auto [a, b] : l) out.push_back({a, b});
  return out;
}

ModelPolynomial k3() { return validate_model(model_k3(), 3); }

}  // namespace

TEST_SUITE("normalizer") {
  TEST_CASE("degree_unknowns examples") {
    const auto u4 = degree_unknowns(3, 4);
    CHECK(u4.g_monomials == ex({{4, 0}, {1, 1}}));
    CHECK(u4.f_monomials == ex({{2, 0}}));
    const auto u6 = degree_unknowns(3, 6);
    CHECK(u6.g_monomials == ex({{6, 0}, {3, 1}, {0, 2}}));
    CHECK(u6.f_monomials == ex({{4, 0}}));
    CHECK_THROWS_AS(degree_unknowns(3, 3), Error);
  }

  TEST_CASE("unknown count matches the distinct residual entries") {
    for (int k0 = 3; k0 <= 6; ++k0) {
      for (int T = k0 + 1; T <= 16; ++T) {
        const int entries = 2 * (T / k0) + 1 - (T % k0 == 0 ? 1 : 0);
        CHECK(int(degree_unknowns(k0, T).size()) == entries);
      }
    }
  }

  TEST_CASE("elementary_map examples") {
    const auto f = elementary_map(3, {2, 0}, q(5), MapComponent::F);
    CHECK(f.f == m(2, 0, q(5)));
    CHECK(f.g.is_zero_poly());
    const auto g = elementary_map(3, {0, 2}, q(5), MapComponent::G);
    CHECK(g.g == m(0, 2, q(5)));
    CHECK_THROWS_AS(elementary_map(3, {1, 0}, q(1), MapComponent::F), Error);
  }

  TEST_CASE("probe_degree_action sees the chain residual") {
    Normalizer nz(k3(), 6);
    const auto s = make_surface(k3(), 6, m(3, 1) + m(0, 4));
    const auto sys = nz.probe_degree_action(s, 4);
    CHECK(sys.residual[1] == q(5, 7));
    CHECK(sys.a.rows() == 6);
    CHECK(sys.a.cols() == 6);
  }

  TEST_CASE("probe columns of the bare model match probes on the surface") {
    Rng rng(41);
    Normalizer nz(k3(), 10);
    for (int trial = 0; trial < 3; ++trial) {
      const auto s = corpus_surface(rng, 10, 8);
      for (int T = 4; T <= 10; ++T) {
        const auto a = nz.probe_degree_action(s, T);
        const auto b = nz.degree_system(s, T);
        CHECK(a.residual == b.residual);
        CHECK(zero_matrix(Matrix<Rational>(a.a - b.a)));
      }
    }
  }

  TEST_CASE("probe action is linear") {
    const auto s = make_surface(k3(), 7, m(0, 4) + m(3, 2, q(2)));
    Normalizer nz(k3(), 7);
    for (int T = 4; T <= 7; ++T) {
      const auto u = degree_unknowns(3, T);
      const auto base = nz.degree_residual(truncate_surface(s, T), T);
      auto col = [&](const Exponent& e, MapComponent c, const ExactScalar& v) {
        auto r = nz.degree_residual(apply_map(elementary_map(3, e, v, c), truncate_surface(s, T)), T);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= base[i];
        return r;
      };
      for (const auto& e : u.f_monomials) {
        const auto one = col(e, MapComponent::F, q(1));
        const auto two = col(e, MapComponent::F, q(2));
        for (std::size_t i = 0; i < one.size(); ++i) CHECK(two[i] == one[i] * q(2));
      }
      for (const auto& e : u.g_monomials) {
        const auto one = col(e, MapComponent::G, ExactScalar::i());
        const auto two = col(e, MapComponent::G, ExactScalar(0, 2));
        for (std::size_t i = 0; i < one.size(); ++i) CHECK(two[i] == one[i] * q(2));
      }
    }
  }

  TEST_CASE("solve_degree clears one degree and keeps lower ones") {
    const auto s = make_surface(k3(), 8, m(3, 1) + m(0, 4) + m(2, 3, q(7)));
    Normalizer nz(k3(), 8);
    auto [map, out] = nz.solve_degree(s, 4);
    CHECK_FALSE(map.is_identity());
    CHECK(all_zero(sN_residual(model_k3(), out.tail.homogeneous_part(4), 4)));
    auto [map5, out5] = nz.solve_degree(out, 5);
    CHECK(out5.tail.degree_range(0, 4) == out.tail.degree_range(0, 4));
    auto [same, again] = nz.solve_degree(out5, 4);
    CHECK(same.is_identity());
    CHECK(again == out5);
  }

  TEST_CASE("resonance_schedule examples") {
    const auto e = resonance_schedule(3, 4, 12);
    REQUIRE(e.size() == 4);
    CHECK(e[0].degree == 6);
    CHECK(e[0].kind == ResonanceCase::A);
    CHECK(e[0].t == 1);
    CHECK(e[1].degree == 8);
    CHECK(e[1].kind == ResonanceCase::B);
    CHECK(e[1].t == 1);
    CHECK(e[2].degree == 10);
    CHECK(e[2].t == 2);
    CHECK(e[3].degree == 12);
    CHECK(e[3].kind == ResonanceCase::B);
    CHECK(e[3].t == 2);
    CHECK(resonance_schedule(3, 4, 5).empty());
  }

  TEST_CASE("schedule degrees are distinct") {
    for (int k0 = 3; k0 <= 6; ++k0) {
      for (int s = k0 + 1; s <= k0 + 4; ++s) {
        const auto e = resonance_schedule(k0, s, 40);
        for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1].degree < e[i].degree);
      }
    }
  }

  TEST_CASE("corrective_map examples") {
    CHECK(corrective_map(ResonanceCase::A, 3, 1, q(3, 2), q(0)).is_identity());
    const auto a = corrective_map(ResonanceCase::A, 3, 1, q(3, 2), q(1));
    CHECK(a.f == m(0, 1, q(3, 2)) - m(3, 0));
    CHECK(a.g.is_zero_poly());
    const auto b = corrective_map(ResonanceCase::B, 3, 1, q(3, 2), ExactScalar::i());
    CHECK(b.f == m(1, 1, ExactScalar::i()));
    CHECK(b.g.is_zero_poly());
    const auto b1 = corrective_map(ResonanceCase::B, 3, 1, q(3, 2), q(1));
    CHECK(b1.g == m(0, 2, q(3)));
  }

  TEST_CASE("solve_resonance on the degree 6 instance") {
    const auto s = make_surface(k3(), 6, m(0, 4) + m(0, 6));
    Normalizer nz(k3(), 6);
    auto [m1, s1] = nz.pass1(s, 4, 6);
    const auto event = resonance_schedule(3, 4, 6).at(0);
    auto out = nz.solve_resonance(s1, event);
    CHECK(out.report.affine);
    CHECK(out.report.target_zero);
    CHECK(is_zero(out.surface.tail.coeff(0, 6)));
    CHECK_FALSE(out.a.is_zero());
    const auto again = apply_map(corrective_map(ResonanceCase::A, 3, 1, q(3, 2), out.a), s1);
    auto [m2, s2] = nz.pass1(again, 5, 6);
    CHECK(is_zero(s2.tail.coeff(0, 6)));
    CHECK(s2 == out.surface);
  }

  TEST_CASE("zero target gives the identity corrective") {
    const auto s = make_surface(k3(), 6, m(0, 4));
    Normalizer nz(k3(), 6);
    auto out = nz.solve_resonance(s, resonance_schedule(3, 4, 6).at(0));
    CHECK(out.a.is_zero());
    CHECK(out.surface == s);
  }

  TEST_CASE("normal input is left alone") {
    const auto s = make_surface(k3(), 12, m(0, 4));
    const auto r = normalize(s);
    CHECK(r.map.is_identity());
    CHECK(r.normal_form == s);
  }

  TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(normalize(make_surface(k3(), 8, m(3, 1))), Error);
  }

  TEST_CASE("normal form of a k0 = 4 surface") {
    Rng rng(42);
    const auto model = validate_model(model_k4(), 4);
    Poly tail = m(0, 5) + sparse(rng, 5, 10, 6);
    tail.set_term({0, 5}, q(1));
    const auto s = make_surface(model, 10, tail.degree_range(5, 10));
    const auto r = normalize(s);
    CHECK(r.map_reproduces);
    CHECK(verify_normal_form(r.normal_form).overall);
    const auto again = normalize(r.normal_form);
    CHECK(again.map.is_identity());
  }
}
