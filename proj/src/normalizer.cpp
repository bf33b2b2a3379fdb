#include "crnf/normalizer.hpp"

#include <algorithm>

namespace crnf {

namespace {

void append_real(std::vector<Rational>& out, const ExactScalar& c) {
  out.push_back(c.real());
  out.push_back(c.imag());
}

bool same_below(const Poly& a, const Poly& b, int degree) {
  return a.degree_range(0, degree - 1) == b.degree_range(0, degree - 1);
}

std::string exponent_text(const Exponent& e) { return std::to_string(e.x) + "," + std::to_string(e.y); }

}  // namespace

DegreeUnknowns degree_unknowns(int k0, int T) {
  if (T < k0 + 1) throw Error(ErrorCode::PreconditionViolated, "degree must exceed k0");
  DegreeUnknowns out;
  out.T = T;
  for (int n = 0; k0 * n <= T; ++n) {
    const Exponent e{T - k0 * n, n};
    if (e.degree() >= 2 && !(e.x == 0 && e.y == 1)) out.g_monomials.push_back(e);
  }
  const int wf = T - k0 + 1;
  for (int l = 0; k0 * l <= wf - 2; ++l) out.f_monomials.push_back(Exponent{wf - k0 * l, l});
  return out;
}

TangentIdentityMap elementary_map(int k0, const Exponent& monomial, const ExactScalar& c, MapComponent component) {
  if (!admissible(component, monomial, k0)) {
    throw Error(ErrorCode::InadmissibleMonomial,
                std::string(component == MapComponent::F ? "f" : "g") + " monomial " + exponent_text(monomial));
  }
  TangentIdentityMap m = identity_map(k0);
  (component == MapComponent::F ? m.f : m.g).add_term(monomial, c);
  return m;
}

std::vector<ResonanceEvent> resonance_schedule(int k0, int s, int order) {
  std::vector<ResonanceEvent> out;
  for (int t = 1; t * s + k0 - 1 <= order; ++t) out.push_back({t * s + k0 - 1, ResonanceCase::A, t, {}});
  for (int t = 1; (t + 1) * s <= order; ++t) out.push_back({(t + 1) * s, ResonanceCase::B, t, {}});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.degree < y.degree; });
  return out;
}

TangentIdentityMap corrective_map(ResonanceCase kind, int k0, int t, const ExactScalar& alpha, const ExactScalar& a) {
  if (t < 1) throw Error(ErrorCode::PreconditionViolated, "corrective index must be positive");
  TangentIdentityMap m = identity_map(k0);
  if (kind == ResonanceCase::A) {
    m.f.add_term(0, t, a * alpha);
    m.f.add_term(k0, t - 1, -a);
  } else {
    const ExactScalar aa = alpha * a;
    m.f.add_term(1, t, a);
    m.g.add_term(0, t + 1, aa + conj(aa));
  }
  return m;
}

int corrective_low_degree(ResonanceCase kind, int k0, int t) {
  return kind == ResonanceCase::A ? k0 * t + k0 - 1 : k0 * (t + 1);
}

Normalizer::Normalizer(ModelPolynomial model, int order)
    : model_(std::move(model)), order_(order), decomposer_(model_.poly) {
  alpha_ = alpha_split(model_).quotient.coeff(0, 0);
}

std::vector<ExactScalar> Normalizer::degree_residual(const SurfaceJet& surface, int T) {
  const auto chain = iterated_chain_with(decomposer_, model_.k0, surface.tail.homogeneous_part(T), T);
  return residual_from_chain(chain, model_.k0);
}

namespace {

DegreeSystem assemble(int T, DegreeUnknowns unknowns, std::vector<ExactScalar> r0,
                      const std::vector<std::array<std::vector<ExactScalar>, 2>>& cols) {
  DegreeSystem sys;
  sys.T = T;
  sys.unknowns = std::move(unknowns);
  sys.residual = std::move(r0);
  const auto rows = Eigen::Index(2 * sys.residual.size());
  sys.a = Matrix<Rational>::Constant(rows, Eigen::Index(2 * cols.size()), Rational(0));
  sys.rhs = Matrix<Rational>(rows, 1);
  for (std::size_t i = 0; i < sys.residual.size(); ++i) {
    sys.rhs(2 * i, 0) = -sys.residual[i].real();
    sys.rhs(2 * i + 1, 0) = -sys.residual[i].imag();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int p = 0; p < 2; ++p) {
        sys.a(2 * i, 2 * j + p) = cols[j][p][i].real();
        sys.a(2 * i + 1, 2 * j + p) = cols[j][p][i].imag();
      }
    }
  }
  return sys;
}

std::vector<std::pair<Exponent, MapComponent>> listed(const DegreeUnknowns& u) {
  std::vector<std::pair<Exponent, MapComponent>> out;
  for (const auto& e : u.g_monomials) out.emplace_back(e, MapComponent::G);
  for (const auto& e : u.f_monomials) out.emplace_back(e, MapComponent::F);
  return out;
}

}  // namespace

DegreeSystem Normalizer::probe_degree_action(const SurfaceJet& surface, int T) {
  const int k0 = model_.k0;
  const SurfaceJet base = truncate_surface(surface, T);
  auto unknowns = degree_unknowns(k0, T);
  const auto r0 = degree_residual(base, T);
  std::vector<std::array<std::vector<ExactScalar>, 2>> cols;
  for (const auto& [e, comp] : listed(unknowns)) {
    std::array<std::vector<ExactScalar>, 2> col;
    const ExactScalar probes[2] = {ExactScalar(1), ExactScalar::i()};
    for (int p = 0; p < 2; ++p) {
      auto r = degree_residual(apply_map(elementary_map(k0, e, probes[p], comp), base), T);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= r0[i];
      col[p] = std::move(r);
    }
    cols.push_back(std::move(col));
  }
  return assemble(T, std::move(unknowns), r0, cols);
}

DegreeSystem Normalizer::degree_system(const SurfaceJet& surface, int T) {
  auto it = columns_.find(T);
  if (it == columns_.end()) {
    const auto sys = probe_degree_action(SurfaceJet{model_, T, {}}, T);
    std::vector<std::array<std::vector<ExactScalar>, 2>> cols(sys.unknowns.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int p = 0; p < 2; ++p) {
        const auto c = Eigen::Index(2 * j + p);
        for (Eigen::Index i = 0; i < Eigen::Index(sys.residual.size()); ++i) {
          cols[j][p].emplace_back(sys.a(2 * i, c), sys.a(2 * i + 1, c));
        }
      }
    }
    it = columns_.emplace(T, std::move(cols)).first;
  }
  return assemble(T, degree_unknowns(model_.k0, T), degree_residual(surface, T), it->second);
}

std::pair<TangentIdentityMap, SurfaceJet> Normalizer::solve_degree(const SurfaceJet& surface, int T, DegreeStep* step) {
  const int k0 = model_.k0;
  const auto sys = degree_system(surface, T);
  const auto sol = bareiss_solve(sys.a, sys.rhs);
  if (step) *step = DegreeStep{T, int(sys.unknowns.size()), sol.rank, false};
  if (!sol.consistent) {
    std::string r;
    for (const auto& x : sys.residual) r += " " + to_string(x);
    throw Error(ErrorCode::DegreeSystemInconsistent, "degree " + std::to_string(T) + " residual" + r);
  }
  if (sol.rank != sys.a.cols()) {
    throw Error(ErrorCode::DegreeSystemUnderdetermined,
                "degree " + std::to_string(T) + " rank " + std::to_string(sol.rank) + " of " + std::to_string(sys.a.cols()));
  }
  if (all_zero(sys.residual)) return {identity_map(k0), surface};

  TangentIdentityMap m = identity_map(k0);
  const auto items = listed(sys.unknowns);
  for (std::size_t j = 0; j < items.size(); ++j) {
    const ExactScalar c(sol.x(Eigen::Index(2 * j), 0), sol.x(Eigen::Index(2 * j + 1), 0));
    (items[j].second == MapComponent::F ? m.f : m.g).add_term(items[j].first, c);
  }
  SurfaceJet out = apply_map(m, surface);
  if (!same_below(out.tail, surface.tail, T)) {
    throw Error(ErrorCode::LowerDegreeDisturbed, "degree step " + std::to_string(T));
  }
  if (!all_zero(degree_residual(out, T))) {
    throw Error(ErrorCode::DegreeSystemInconsistent, "degree " + std::to_string(T) + " not cleared after commit");
  }
  if (step) step->changed = true;
  return {m, out};
}

std::pair<TangentIdentityMap, SurfaceJet> Normalizer::pass1(const SurfaceJet& surface, int from, int to,
                                                            std::vector<DegreeStep>* steps) {
  TangentIdentityMap total = identity_map(model_.k0);
  SurfaceJet cur = surface;
  for (int T = std::max(from, model_.k0 + 1); T <= std::min(to, surface.order); ++T) {
    DegreeStep step;
    auto [m, next] = solve_degree(cur, T, &step);
    if (steps) steps->push_back(step);
    if (!m.is_identity()) {
      total = compose_maps(total, m, surface.order);
      cur = std::move(next);
    }
  }
  return {total, cur};
}

std::pair<TangentIdentityMap, SurfaceJet> Normalizer::apply_corrective(const SurfaceJet& surface,
                                                                       const ResonanceEvent& e, const ExactScalar& a) {
  const int k0 = model_.k0;
  const auto m = corrective_map(e.kind, k0, e.t, alpha_, a);
  auto [m2, out] = pass1(apply_map(m, surface), corrective_low_degree(e.kind, k0, e.t), surface.order);
  return {compose_maps(m, m2, surface.order), out};
}

ExactScalar Normalizer::target_after(const SurfaceJet& surface, const ResonanceEvent& e, const ExactScalar& a) {
  return apply_corrective(surface, e, a).second.tail.coeff(0, e.degree);
}

Normalizer::ResonanceOutcome Normalizer::solve_resonance(const SurfaceJet& surface, const ResonanceEvent& event,
                                                         const std::vector<ResonanceEvent>& earlier) {
  const int k0 = model_.k0;
  const int k = event.degree;
  ResonanceReport rep;
  rep.event = event;
  rep.low_degree = corrective_low_degree(event.kind, k0, event.t);
  const SurfaceJet local = truncate_surface(surface, k);
  const ExactScalar at[4] = {ExactScalar(0), ExactScalar(1), ExactScalar::i(), ExactScalar(Rational(1), Rational(1))};
  for (int p = 0; p < 4; ++p) rep.probes[p] = target_after(local, event, at[p]);
  const ExactScalar& v0 = rep.probes[0];
  const ExactScalar u = rep.probes[1] - v0;
  const ExactScalar v = rep.probes[2] - v0;
  rep.affine = rep.probes[3] - v0 == u + v;
  if (!rep.affine) {
    std::string msg = "degree " + std::to_string(k) + " probes";
    for (const auto& x : rep.probes) msg += " " + to_string(x);
    throw Error(ErrorCode::ResonanceNonAffine, msg);
  }
  rep.determinant = u.real() * v.imag() - u.imag() * v.real();
  const int s = (event.kind == ResonanceCase::A) ? (k - k0 + 1) / event.t : k / (event.t + 1);
  {
    ExactScalar f = conj(alpha_) - ExactScalar(s);
    const ExactScalar g = alpha_ - ExactScalar(s) / alpha_;
    for (int j = 1; j < event.t; ++j) f *= g;
    rep.closed_form_factor = f;
  }
  if (rep.determinant == 0) throw Error(ErrorCode::ResonanceSingular, "degree " + std::to_string(k));
  const Rational x = (v0.imag() * v.real() - v0.real() * v.imag()) / rep.determinant;
  const Rational y = (u.imag() * v0.real() - u.real() * v0.imag()) / rep.determinant;
  const ExactScalar a(x, y);
  rep.event.a = a;

  auto [m, out] = apply_corrective(surface, event, a);
  rep.target_zero = is_zero(out.tail.coeff(0, k));
  rep.lower_degrees_unchanged = same_below(out.tail, surface.tail, k);
  rep.earlier_targets_unchanged = true;
  for (const auto& e : earlier) {
    if (out.tail.coeff(0, e.degree) != surface.tail.coeff(0, e.degree)) rep.earlier_targets_unchanged = false;
  }
  if (!same_below(out.tail, surface.tail, rep.low_degree) || !rep.earlier_targets_unchanged) {
    throw Error(ErrorCode::LowerDegreeDisturbed, "resonance at degree " + std::to_string(k));
  }
  if (!rep.target_zero) throw Error(ErrorCode::ResonanceNonAffine, "target not cleared at degree " + std::to_string(k));
  return {m, out, a, rep};
}

namespace {

std::vector<Exponent> coordinates(int lo, int hi) {
  std::vector<Exponent> out;
  for (int d = lo; d <= hi; ++d) {
    for (int m = 0; m <= d; ++m) out.push_back(Exponent{m, d - m});
  }
  return out;
}

std::vector<Rational> coordinate_values(const Poly& tail, const std::vector<Exponent>& coords) {
  std::vector<Rational> out;
  for (const auto& e : coords) append_real(out, tail.coeff(e));
  return out;
}

}  // namespace

constexpr int kGaugeIterations = 16;

std::pair<TangentIdentityMap, SurfaceJet> Normalizer::gauge(const SurfaceJet& surface, int s, GaugeReport& report) {
  const int k0 = model_.k0;
  const int n = surface.order;
  const int fmax = n - k0 + 1;
  std::vector<ResonanceEvent> params;
  for (int t = 1; k0 * t <= fmax; ++t) {
    if (t * s + k0 - 1 > n) report.free_parameters.push_back({t * s + k0 - 1, ResonanceCase::A, t, {}});
  }
  for (int t = 1; 1 + k0 * t <= fmax; ++t) {
    if ((t + 1) * s > n) report.free_parameters.push_back({(t + 1) * s, ResonanceCase::B, t, {}});
  }
  if (report.free_parameters.empty()) return {identity_map(k0), surface};
  int low_free = n;
  for (const auto& e : report.free_parameters) low_free = std::min(low_free, corrective_low_degree(e.kind, k0, e.t));
  for (const auto& e : resonance_schedule(k0, s, n)) {
    if (e.degree >= low_free) report.refit_events.push_back(e);
  }
  params = report.refit_events;
  params.insert(params.end(), report.free_parameters.begin(), report.free_parameters.end());
  int low = n;
  for (const auto& e : params) low = std::min(low, corrective_low_degree(e.kind, k0, e.t));

  const auto coords = coordinates(low, n);
  const auto base = coordinate_values(surface.tail, coords);
  const auto rows = Eigen::Index(base.size());
  const auto cols = Eigen::Index(2 * params.size());
  Matrix<Rational> effect(rows, cols);
  for (std::size_t j = 0; j < params.size(); ++j) {
    const ExactScalar probes[2] = {ExactScalar(1), ExactScalar::i()};
    for (int p = 0; p < 2; ++p) {
      const auto moved = coordinate_values(apply_corrective(surface, params[j], probes[p]).second.tail, coords);
      for (Eigen::Index i = 0; i < rows; ++i) effect(i, Eigen::Index(2 * j + p)) = moved[i] - base[i];
    }
  }

  auto commit = [&](const std::vector<ExactScalar>& a) {
    TangentIdentityMap total = identity_map(k0);
    SurfaceJet cur = surface;
    for (std::size_t j = 0; j < params.size(); ++j) {
      if (a[j].is_zero()) continue;
      const auto m = corrective_map(params[j].kind, k0, params[j].t, alpha_, a[j]);
      cur = apply_map(m, cur);
      total = compose_maps(total, m, n);
    }
    auto [m2, out] = pass1(cur, low, n);
    return std::pair{compose_maps(total, m2, n), out};
  };

  std::vector<Eigen::Index> chosen;
  auto rank_of = [&](const std::vector<Eigen::Index>& sel) {
    Matrix<Rational> sub(Eigen::Index(sel.size()), cols);
    for (std::size_t r = 0; r < sel.size(); ++r) sub.row(Eigen::Index(r)) = effect.row(sel[r]);
    return bareiss_solve(sub, Matrix<Rational>(Matrix<Rational>::Zero(Eigen::Index(sel.size()), 1))).rank;
  };
  for (const auto& e : report.refit_events) {
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (coords[c] == Exponent{0, e.degree}) {
        chosen.push_back(Eigen::Index(2 * c));
        chosen.push_back(Eigen::Index(2 * c + 1));
      }
    }
  }
  const int full = rank_of([&] {
    std::vector<Eigen::Index> all(static_cast<std::size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) all[std::size_t(i)] = i;
    return all;
  }());
  int have = chosen.empty() ? 0 : rank_of(chosen);
  for (Eigen::Index i = 0; i < rows && have < full; ++i) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    chosen.push_back(i);
    const int r = rank_of(chosen);
    if (r > have) {
      have = r;
      const auto& e = coords[std::size_t(i / 2)];
      report.pinned_coordinates.push_back(std::string(i % 2 ? "Im" : "Re") + " a[" + exponent_text(e) + "]");
    } else {
      chosen.pop_back();
    }
  }
  report.rank = have;

  Matrix<Rational> sub(Eigen::Index(chosen.size()), cols);
  Matrix<Rational> rhs(Eigen::Index(chosen.size()), 1);
  for (std::size_t r = 0; r < chosen.size(); ++r) {
    sub.row(Eigen::Index(r)) = effect.row(chosen[r]);
  }
  std::vector<ExactScalar> a(params.size());
  std::pair<TangentIdentityMap, SurfaceJet> out{identity_map(k0), surface};
  auto values = base;
  for (report.iterations = 0; report.iterations < kGaugeIterations; ++report.iterations) {
    bool reached = true;
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      rhs(Eigen::Index(r), 0) = -values[std::size_t(chosen[r])];
      if (rhs(Eigen::Index(r), 0) != 0) reached = false;
    }
    if (reached) break;
    const auto sol = bareiss_solve(sub, rhs);
    if (!sol.consistent) throw Error(ErrorCode::DegreeSystemInconsistent, "truncation gauge");
    for (std::size_t j = 0; j < params.size(); ++j) {
      a[j] += ExactScalar(sol.x(Eigen::Index(2 * j), 0), sol.x(Eigen::Index(2 * j + 1), 0));
    }
    out = commit(a);
    values = coordinate_values(out.second.tail, coords);
  }
  if (report.iterations == kGaugeIterations) throw Error(ErrorCode::ResonanceNonAffine, "truncation gauge did not close");
  report.affine = report.iterations <= 1;
  for (std::size_t j = 0; j < report.refit_events.size(); ++j) report.refit_events[j].a = a[j];
  for (std::size_t j = 0; j < report.free_parameters.size(); ++j) {
    report.free_parameters[j].a = a[report.refit_events.size() + j];
  }
  return out;
}

NormalizationResult Normalizer::normalize(const SurfaceJet& surface) {
  if (surface.model.poly != model_.poly || surface.k0() != model_.k0 || surface.order != order_) {
    throw Error(ErrorCode::PreconditionViolated, "normalizer built for a different model or order");
  }
  NormalizationResult res;
  res.invariants = surface_invariants(surface);
  if (!res.invariants.nondegenerate) {
    std::string msg;
    for (auto r : res.invariants.reasons) msg += std::string(msg.empty() ? "" : ", ") + degeneracy_name(r);
    throw Error(ErrorCode::NondegeneracyViolated, msg);
  }
  const int s = *res.invariants.s;
  auto [total, cur] = pass1(surface, model_.k0 + 1, order_, &res.degree_steps);
  std::vector<ResonanceEvent> done;
  for (const auto& e : resonance_schedule(model_.k0, s, order_)) {
    auto out = solve_resonance(cur, e, done);
    if (!out.map.is_identity()) total = compose_maps(total, out.map, order_);
    cur = std::move(out.surface);
    res.resonances.push_back(out.report);
    done.push_back(out.report.event);
  }
  auto [gm, gs] = gauge(cur, s, res.gauge);
  if (!gm.is_identity()) total = compose_maps(total, gm, order_);
  res.map = total;
  res.normal_form = std::move(gs);
  res.map_reproduces = apply_map(res.map, surface) == res.normal_form;
  return res;
}

NormalizationResult normalize(const SurfaceJet& surface) {
  return Normalizer(surface.model, surface.order).normalize(surface);
}

}  // namespace crnf
