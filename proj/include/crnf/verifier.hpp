#pragma once

#include "crnf/normalizer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crnf {

struct DegreeCheck {
  int T = 0;
  std::vector<ExactScalar> residual;
  bool pass = false;
};

struct TargetCheck {
  int k = 0;
  ExactScalar coefficient;
  bool pass = false;
};

struct VerificationReport {
  std::vector<DegreeCheck> per_degree;
  bool resonance_applicable = false;
  std::vector<TargetCheck> resonance_targets;
  bool overall = false;
};

/// Recomputes every residual with the uncached decomposition.
VerificationReport verify_normal_form(const SurfaceJet& surface);

/// Degrees k <= order with k ≡ k0-1 (mod s), k > k0, or k ≡ 0 (mod s), k >= 2s.
std::vector<int> resonant_degrees(int k0, int s, int order);

class PseudoWeightTable {
 public:
  PseudoWeightTable(int k0, int s);

  int k0() const { return k0_; }
  int s() const { return s_; }
  const Rational& zbar_weight() const { return r_; }

  Rational operator()(int gamma, int beta);

 private:
  Rational compute(int gamma, int beta);

  int k0_;
  int s_;
  Rational r_;
  std::map<std::pair<int, int>, Rational> memo_;
};

Rational pseudo_weight(PseudoWeightTable& table, int gamma, int beta);
Rational min_pseudo_weight(PseudoWeightTable& table, const Poly& poly);

enum class Verdict { Equivalent, Inequivalent, Undecided };
enum class EquivMode { Tangent, Linear };

const char* verdict_name(Verdict v);

struct EquivalenceResult {
  Verdict verdict = Verdict::Undecided;
  std::vector<std::string> certificate;
  std::optional<NormalizationResult> normal_a;
  std::optional<NormalizationResult> normal_b;
};

EquivalenceResult equiv_check(const SurfaceJet& a, const SurfaceJet& b, EquivMode mode);

}  // namespace crnf
