#pragma once

#include "crnf/compose.hpp"
#include "crnf/fischer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crnf {

using Poly = BiPoly<ExactScalar>;
using SurfaceJetPoly = Jet<ExactScalar>;

enum class ModelViolation { NotHomogeneous, NotRealValued, PureTermPresent, LeadingNotOne };

const char* violation_name(ModelViolation v);

/// Real-valued homogeneous P of degree k0 >= 3, no pure terms, p_{1,k0-1} = 1.
struct ModelPolynomial {
  int k0 = 0;
  Poly poly;
};

std::vector<ModelViolation> model_violations(const Poly& poly, int k0);
ModelPolynomial validate_model(const Poly& poly, int k0);

bool is_real_valued(const Poly& p);

/// w = P(z, z̄) + tail, known through total degree `order`.
struct SurfaceJet {
  ModelPolynomial model;
  int order = 0;
  Poly tail;

  int k0() const { return model.k0; }
  Poly graph() const { return model.poly + tail; }
  friend bool operator==(const SurfaceJet& a, const SurfaceJet& b) {
    return a.model.k0 == b.model.k0 && a.model.poly == b.model.poly && a.order == b.order && a.tail == b.tail;
  }
};

SurfaceJet make_surface(ModelPolynomial model, int order, Poly tail);
SurfaceJet truncate_surface(const SurfaceJet& s, int order);

enum class Degeneracy { NoSWithinTruncation, AlphaZero, AlphaEqualsS, AlphaSquaredZero, AlphaSquaredEqualsS };

const char* degeneracy_name(Degeneracy d);

struct SurfaceInvariants {
  std::optional<int> s;
  ExactScalar alpha;
  Poly alpha_remainder;
  bool nondegenerate = false;
  std::vector<Degeneracy> reasons;
};

/// α and R from zP_z = αP + R with P*(R) = 0.
FischerSplit<ExactScalar> alpha_split(const ModelPolynomial& model);

SurfaceInvariants surface_invariants(const SurfaceJet& surface);

/// (z, w) ↦ (z + f(z, w), w + g(z, w)).  f and g use exponents (k, l) of z^k w^l.
struct TangentIdentityMap {
  int k0 = 0;
  Poly f;
  Poly g;

  bool is_identity() const { return f.is_zero_poly() && g.is_zero_poly(); }
  friend bool operator==(const TangentIdentityMap&, const TangentIdentityMap&) = default;
};

enum class MapComponent { F, G };

inline long normal_weight(const Exponent& e, int k0) { return e.x + long(k0) * e.y; }

/// f terms need normal weight >= 2, g terms normal weight >= k0 + 1.
bool admissible(MapComponent c, const Exponent& e, int k0);
void check_admissible(const TangentIdentityMap& m);

TangentIdentityMap identity_map(int k0);

/// Drops terms that cannot affect a surface jet of the given order.
TangentIdentityMap truncate_map(const TangentIdentityMap& m, int order);

SurfaceJet apply_map(const TangentIdentityMap& map, const SurfaceJet& surface);

/// apply_map(result, S) = apply_map(second, apply_map(first, S)) through `order`.
TangentIdentityMap compose_maps(const TangentIdentityMap& first, const TangentIdentityMap& second, int order);

struct Phase {
  int quarter_turns = 0;  // ζ = i^quarter_turns
  int sign = 1;           // ζ^{m-n} on the support of P
};

struct LinearConstraints {
  std::vector<int> differences;  // distinct (m-n) - (m'-n') over supp P, positive ones
  int gcd = 0;                   // admissible phases are the gcd-th roots of unity
  std::vector<Phase> exact_phases;
  int inexact_phase_count = 0;  // roots of unity outside Q(i)
  std::string reading = "g01 P(z, zbar) = P(f10 z, conj(f10) zbar)";
};

LinearConstraints linear_automorphism_constraints(const ModelPolynomial& model);

/// g_{0,1} for λ = ρ·i^q, or nullopt if λ is not admissible.
std::optional<ExactScalar> linear_automorphism_factor(const ModelPolynomial& model, const ExactScalar& lambda);

/// Tail of the image under (z, w) ↦ (λz, g01·w).
Poly scale_tail(const Poly& tail, const ExactScalar& lambda, const ExactScalar& g01);

}  // namespace crnf
