#include "support.hpp"

#include <doctest.h>

using namespace crnf;
using namespace crnf::testing;

namespace {

Poly m(int a, int b, ExactScalar c = ExactScalar(1)) { return Poly::monomial(a, b, c); }
ExactScalar q(long p, long d = 1) { return ExactScalar(Rational(p, d)); }

bool has(const std::vector<ModelViolation>& v, ModelViolation x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("validate_model examples") {
    CHECK(model_violations(model_k3(), 3).empty());
    CHECK_NOTHROW(validate_model(model_k3(), 3));
    CHECK(has(model_violations(m(3, 0) + model_k3() + m(0, 3), 3), ModelViolation::PureTermPresent));
    CHECK(has(model_violations(model_k3() * q(2), 3), ModelViolation::LeadingNotOne));
    CHECK(has(model_violations(model_k3() + m(2, 2), 3), ModelViolation::NotHomogeneous));
    CHECK(has(model_violations(m(2, 1, ExactScalar::i()) + m(1, 2), 3), ModelViolation::NotRealValued));
    CHECK_THROWS_AS(validate_model(model_k3() * q(2), 3), Error);
  }

  TEST_CASE("tail support is checked") {
    const auto model = validate_model(model_k3(), 3);
    CHECK_THROWS_AS(make_surface(model, 6, m(2, 1)), Error);
    CHECK_THROWS_AS(make_surface(model, 6, m(0, 7)), Error);
    CHECK_THROWS_AS(make_surface(model, 3, Poly{}), Error);
  }

  TEST_CASE("surface_invariants examples") {
    const auto s = make_surface(validate_model(model_k3(), 3), 12, m(0, 4));
    const auto inv = surface_invariants(s);
    REQUIRE(inv.s.has_value());
    CHECK(*inv.s == 4);
    CHECK(inv.alpha == q(3, 2));
    CHECK(inv.alpha_remainder == m(2, 1, q(1, 2)) - m(1, 2, q(1, 2)));
    CHECK(inv.nondegenerate);

    const auto s4 = make_surface(validate_model(model_k4(), 4), 8, m(0, 5));
    const auto inv4 = surface_invariants(s4);
    CHECK(inv4.alpha == q(2));
    CHECK(*inv4.s == 5);
    CHECK(inv4.nondegenerate);

    const auto flat = make_surface(validate_model(model_k3(), 3), 8, m(3, 1));
    const auto invf = surface_invariants(flat);
    CHECK_FALSE(invf.s.has_value());
    CHECK_FALSE(invf.nondegenerate);
    REQUIRE(invf.reasons.size() == 1);
    CHECK(invf.reasons[0] == Degeneracy::NoSWithinTruncation);
  }

  TEST_CASE("alpha is half the degree for every model") {
    Rng rng(31);
    for (int k0 = 3; k0 <= 6; ++k0) {
      for (int trial = 0; trial < 5; ++trial) {
        Poly p = real_homogeneous(rng, k0);
        p.set_term({k0, 0}, ExactScalar(0));
        p.set_term({0, k0}, ExactScalar(0));
        p.set_term({1, k0 - 1}, ExactScalar(1));
        p.set_term({k0 - 1, 1}, ExactScalar(1));
        const auto split = alpha_split(ModelPolynomial{k0, p});
        CHECK(split.quotient == m(0, 0, q(k0, 2)));
        CHECK(adjoint_apply(p, split.remainder).is_zero_poly());
        CHECK(conj(split.remainder) == -split.remainder);
      }
    }
  }

  TEST_CASE("apply_map examples") {
    const auto model = validate_model(model_k3(), 3);
    const auto s = make_surface(model, 6, m(0, 4));
    CHECK(apply_map(identity_map(3), s) == s);
    const auto out = apply_map(TangentIdentityMap{3, {}, m(0, 2)}, s);
    CHECK(out.tail == m(0, 4) + m(4, 2) + m(3, 3, q(2)) + m(2, 4));
    CHECK_THROWS_AS(apply_map(TangentIdentityMap{3, m(1, 0), {}}, s), Error);
    CHECK_THROWS_AS(apply_map(TangentIdentityMap{3, {}, m(0, 1)}, s), Error);
    CHECK_THROWS_AS(apply_map(identity_map(4), s), Error);
  }

  TEST_CASE("random maps keep the model and s") {
    Rng rng(32);
    for (int trial = 0; trial < 15; ++trial) {
      const auto s = corpus_surface(rng, 9, 6);
      const auto out = apply_map(random_map(rng, 3, 9, 4), s);
      CHECK(out.model.poly == s.model.poly);
      CHECK(out.tail.degree_range(0, 3).is_zero_poly());
      CHECK(surface_invariants(out).s == surface_invariants(s).s);
    }
  }

  TEST_CASE("compose_maps identity and functoriality") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = corpus_surface(rng, 9, 6);
      const auto a = random_map(rng, 3, 9, 4);
      const auto b = random_map(rng, 3, 9, 4);
      const auto c = random_map(rng, 3, 9, 3);
      CHECK(compose_maps(identity_map(3), a, 9) == truncate_map(a, 9));
      CHECK(compose_maps(a, identity_map(3), 9) == truncate_map(a, 9));
      CHECK(apply_map(compose_maps(a, b, 9), s) == apply_map(b, apply_map(a, s)));
      CHECK(compose_maps(compose_maps(a, b, 9), c, 9) == compose_maps(a, compose_maps(b, c, 9), 9));
    }
  }

  TEST_CASE("admissibility follows normal weight") {
    CHECK(admissible(MapComponent::F, {2, 0}, 3));
    CHECK(admissible(MapComponent::F, {0, 1}, 3));
    CHECK_FALSE(admissible(MapComponent::F, {1, 0}, 3));
    CHECK_FALSE(admissible(MapComponent::F, {0, 0}, 3));
    CHECK(admissible(MapComponent::G, {4, 0}, 3));
    CHECK(admissible(MapComponent::G, {1, 1}, 3));
    CHECK_FALSE(admissible(MapComponent::G, {3, 0}, 3));
    CHECK_FALSE(admissible(MapComponent::G, {0, 1}, 3));
  }

  TEST_CASE("linear_automorphism_constraints examples") {
    const auto c3 = linear_automorphism_constraints(validate_model(model_k3(), 3));
    CHECK(c3.gcd == 2);
    CHECK(c3.inexact_phase_count == 0);
    REQUIRE(c3.exact_phases.size() == 2);
    CHECK(linear_automorphism_factor(validate_model(model_k3(), 3), q(2)) == q(8));
    CHECK(linear_automorphism_factor(validate_model(model_k3(), 3), q(-1, 2)) == q(-1, 8));
    CHECK_FALSE(linear_automorphism_factor(validate_model(model_k3(), 3), ExactScalar::i()).has_value());

    const auto model4 = validate_model(model_k4(), 4);
    const auto c4 = linear_automorphism_constraints(model4);
    CHECK(c4.gcd == 4);
    CHECK(c4.exact_phases.size() == 4);
    CHECK(linear_automorphism_factor(model4, q(3)) == q(81));
    CHECK(linear_automorphism_factor(model4, ExactScalar::i()) == q(-1));
    CHECK(linear_automorphism_factor(model4, q(1)) == q(1));
  }

  TEST_CASE("scaled tails of normal forms") {
    const Poly t = m(0, 4, q(2)) + m(3, 1, ExactScalar::i());
    const Poly s = scale_tail(t, q(2), q(8));
    CHECK(s.coeff(0, 4) == q(1));
    CHECK(s.coeff(3, 1) == ExactScalar(Rational(0), Rational(1, 2)));
  }
}
