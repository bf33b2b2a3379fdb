#pragma once

#include "crnf/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crnf {

/// Pass-1 unknowns at degree T: g_{m,n} with m + k0·n = T and f_{k,l} with
/// k + k0·l = T - k0 + 1, k >= 2.  f_{0,·} and f_{1,·} are never listed.
struct DegreeUnknowns {
  int T = 0;
  std::vector<Exponent> g_monomials;
  std::vector<Exponent> f_monomials;
  std::size_t size() const { return g_monomials.size() + f_monomials.size(); }
};

DegreeUnknowns degree_unknowns(int k0, int T);

TangentIdentityMap elementary_map(int k0, const Exponent& monomial, const ExactScalar& c, MapComponent component);

/// Exact real-linear system A·x = rhs at one degree.  Unknown j has real part
/// in column 2j and imaginary part in column 2j+1; residual entry i has real
/// part in row 2i and imaginary part in row 2i+1.
struct DegreeSystem {
  int T = 0;
  DegreeUnknowns unknowns;
  std::vector<ExactScalar> residual;
  Matrix<Rational> a;
  Matrix<Rational> rhs;
};

enum class ResonanceCase { A, B };

struct ResonanceEvent {
  int degree = 0;
  ResonanceCase kind = ResonanceCase::A;
  int t = 0;  // corrective index: k = t·s + k0 - 1 for A, k = (t+1)·s for B
  ExactScalar a;
};

std::vector<ResonanceEvent> resonance_schedule(int k0, int s, int order);

TangentIdentityMap corrective_map(ResonanceCase kind, int k0, int t, const ExactScalar& alpha, const ExactScalar& a);

/// Lowest total degree changed by corrective_map(kind, k0, t, ...).
int corrective_low_degree(ResonanceCase kind, int k0, int t);

struct DegreeStep {
  int T = 0;
  int unknowns = 0;
  int rank = 0;
  bool changed = false;
};

struct ResonanceReport {
  ResonanceEvent event;
  int low_degree = 0;
  std::array<ExactScalar, 4> probes;  // target at a = 0, 1, i, 1+i
  bool affine = false;
  Rational determinant;
  ExactScalar closed_form_factor;  // (conj(α) - s)(α - s/α)^{t-1}
  bool target_zero = false;
  bool lower_degrees_unchanged = false;
  bool earlier_targets_unchanged = false;
};

/// Frozen parameters f_{0,t}, f_{1,t} whose resonance lies beyond the order
/// still move the jet.  They are fixed jointly with the resonances they
/// disturb by zeroing the first independent tail coordinates; the linear
/// effect is iterated until those coordinates vanish exactly.
struct GaugeReport {
  std::vector<ResonanceEvent> free_parameters;
  std::vector<ResonanceEvent> refit_events;
  std::vector<std::string> pinned_coordinates;
  int rank = 0;
  int iterations = 0;
  bool affine = true;
};

struct NormalizationResult {
  TangentIdentityMap map;
  SurfaceJet normal_form;
  SurfaceInvariants invariants;
  std::vector<DegreeStep> degree_steps;
  std::vector<ResonanceReport> resonances;
  GaugeReport gauge;
  bool map_reproduces = false;
};

/// Stateful only through caches that depend on the model alone.
class Normalizer {
 public:
  Normalizer(ModelPolynomial model, int order);

  const ModelPolynomial& model() const { return model_; }
  int order() const { return order_; }
  const ExactScalar& alpha() const { return alpha_; }

  std::vector<ExactScalar> degree_residual(const SurfaceJet& surface, int T);

  /// Columns obtained by probing the surface itself (no caching).
  DegreeSystem probe_degree_action(const SurfaceJet& surface, int T);
  /// Same system with columns probed once on the bare model.
  DegreeSystem degree_system(const SurfaceJet& surface, int T);

  std::pair<TangentIdentityMap, SurfaceJet> solve_degree(const SurfaceJet& surface, int T, DegreeStep* step = nullptr);

  /// Pass 1 on degrees from..to; returns the composed map and the new jet.
  std::pair<TangentIdentityMap, SurfaceJet> pass1(const SurfaceJet& surface, int from, int to,
                                                  std::vector<DegreeStep>* steps = nullptr);

  struct ResonanceOutcome {
    TangentIdentityMap map;
    SurfaceJet surface;
    ExactScalar a;
    ResonanceReport report;
  };
  ResonanceOutcome solve_resonance(const SurfaceJet& surface, const ResonanceEvent& event,
                                   const std::vector<ResonanceEvent>& earlier = {});

  NormalizationResult normalize(const SurfaceJet& surface);

 private:
  std::pair<TangentIdentityMap, SurfaceJet> apply_corrective(const SurfaceJet& surface, const ResonanceEvent& e,
                                                             const ExactScalar& a);
  ExactScalar target_after(const SurfaceJet& surface, const ResonanceEvent& e, const ExactScalar& a);
  std::pair<TangentIdentityMap, SurfaceJet> gauge(const SurfaceJet& surface, int s, GaugeReport& report);

  ModelPolynomial model_;
  int order_;
  ExactScalar alpha_;
  FischerDecomposer<ExactScalar> decomposer_;
  std::map<int, std::vector<std::array<std::vector<ExactScalar>, 2>>> columns_;
};

NormalizationResult normalize(const SurfaceJet& surface);

}  // namespace crnf
