#include "crnf/io.hpp"

#include <algorithm>
#include <set>

namespace crnf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

Rational rational_field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (std::string(key) == "im") return Rational(0);
    fail(path + "." + key, "missing");
  }
  if (it->is_number_integer()) return Rational(it->get<long long>());
  if (!it->is_string()) fail(path + "." + key, "expected a rational string");
  auto r = parse_rational(it->get<std::string>());
  if (!r) fail(path + "." + key, "malformed rational \"" + it->get<std::string>() + "\"");
  return *r;
}

void check_format(const Json& j, const char* expected) {
  auto it = j.find("format");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected)) {
    fail("format", std::string("expected \"") + expected + "\"");
  }
}

Poly terms_from_json(const Json& arr, const char* xk, const char* yk, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array");
  Poly out;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const int x = int_field(arr[i], xk, p);
    const int y = int_field(arr[i], yk, p);
    if (x < 0 || y < 0) fail(p, "negative exponent");
    if (!seen.insert({x, y}).second) fail(p, "duplicate entry (" + std::to_string(x) + "," + std::to_string(y) + ")");
    out.add_term(x, y, ExactScalar(rational_field(arr[i], "re", p), rational_field(arr[i], "im", p)));
  }
  return out;
}

Json terms_to_json(const Poly& p, const char* xk, const char* yk) {
  Json arr = Json::array();
  for (const auto& [e, c] : p) {
    arr.push_back(Json{{xk, e.x}, {yk, e.y}, {"re", to_string(c.real())}, {"im", to_string(c.imag())}});
  }
  return arr;
}

Json residual_json(const std::vector<ExactScalar>& r) {
  Json arr = Json::array();
  for (const auto& x : r) arr.push_back(scalar_to_json(x));
  return arr;
}

const char* case_name(ResonanceCase c) { return c == ResonanceCase::A ? "A" : "B"; }

Json event_json(const ResonanceEvent& e) {
  return Json{{"degree", e.degree}, {"case", case_name(e.kind)}, {"t", e.t}, {"a", scalar_to_json(e.a)}};
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("byte " + std::to_string(e.byte), e.what());
  }
}

Json scalar_to_json(const ExactScalar& c) { return Json{{"re", to_string(c.real())}, {"im", to_string(c.imag())}}; }

SurfaceJet surface_from_json(const Json& j) {
  check_format(j, kSurfaceFormat);
  const int k0 = int_field(j, "k0", "");
  const int degree = int_field(j, "degree", "");
  const Poly model = terms_from_json(field(j, "model", ""), "m", "n", "model");
  Poly tail;
  if (j.contains("tail")) tail = terms_from_json(j["tail"], "m", "n", "tail");
  return make_surface(validate_model(model, k0), degree, tail);
}

Json surface_to_json(const SurfaceJet& s) {
  return Json{{"format", kSurfaceFormat},
              {"k0", s.k0()},
              {"degree", s.order},
              {"model", terms_to_json(s.model.poly, "m", "n")},
              {"tail", terms_to_json(s.tail, "m", "n")}};
}

TangentIdentityMap map_from_json(const Json& j) {
  check_format(j, kMapFormat);
  TangentIdentityMap m;
  m.k0 = int_field(j, "k0", "");
  if (j.contains("f")) m.f = terms_from_json(j["f"], "k", "l", "f");
  if (j.contains("g")) m.g = terms_from_json(j["g"], "k", "l", "g");
  check_admissible(m);
  return m;
}

Json map_to_json(const TangentIdentityMap& m) {
  return Json{{"format", kMapFormat}, {"k0", m.k0}, {"f", terms_to_json(m.f, "k", "l")}, {"g", terms_to_json(m.g, "k", "l")}};
}

Poly poly_from_json(const Json& j) {
  if (j.is_object() && j.contains("format") && j["format"] == kSurfaceFormat) return surface_from_json(j).model.poly;
  check_format(j, kPolyFormat);
  return terms_from_json(field(j, "terms", ""), "m", "n", "terms");
}

Json poly_to_json(const Poly& p) { return Json{{"format", kPolyFormat}, {"terms", terms_to_json(p, "m", "n")}}; }

std::string poly_text(const Poly& p, const std::string& x, const std::string& y) {
  if (p.is_zero_poly()) return "0";
  std::vector<std::pair<Exponent, ExactScalar>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.x + a.first.y;
    const int db = b.first.x + b.first.y;
    return da != db ? da < db : a.first.x > b.first.x;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    auto var = [&](const std::string& v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v + (k > 1 ? "^" + std::to_string(k) : "");
    };
    var(x, e.x);
    var(y, e.y);
    std::string coef = to_string(c);
    bool neg = false;
    if (c.is_real() && c.real() < 0) {
      neg = true;
      coef = to_string(Rational(-c.real()));
    } else if (!c.is_real() && !(c.real() == 0)) {
      coef = "(" + coef + ")";
    } else if (!c.is_real() && c.imag() < 0) {
      neg = true;
      coef = to_string(-c);
    }
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json audit_flags() {
  return Json{{"chain_recursion", "S_j = S_{j+1} P + T_{j+1}"},
              {"zbar_entries_start", 1},
              {"resonance_degrees", "k = t s + k0 - 1 (t >= 1); k = t s (t >= 2)"},
              {"case_b_corrective_index", "k = (t+1) s"},
              {"case_a_monomial", "a z^k0 w^(t-1)"},
              {"linear_part_reading", "g01 P(z, zbar) = P(f10 z, conj(f10) zbar)"},
              {"map_admissibility", "f: k + k0 l >= 2; g: k + k0 l >= k0 + 1"}};
}

Json invariants_to_json(const SurfaceInvariants& inv) {
  Json reasons = Json::array();
  for (auto r : inv.reasons) reasons.push_back(degeneracy_name(r));
  return Json{{"s", inv.s ? Json(*inv.s) : Json("infinite")},
              {"alpha", scalar_to_json(inv.alpha)},
              {"R", poly_text(inv.alpha_remainder)},
              {"nondegenerate", inv.nondegenerate},
              {"reasons", reasons}};
}

Json normalization_report(const NormalizationResult& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degree_steps) {
    degrees.push_back(Json{{"T", d.T}, {"unknowns", d.unknowns}, {"rank", d.rank}, {"changed", d.changed}});
  }
  Json events = Json::array();
  for (const auto& e : r.resonances) {
    Json probes = Json::array();
    for (const auto& p : e.probes) probes.push_back(scalar_to_json(p));
    Json ev = event_json(e.event);
    ev["low_degree"] = e.low_degree;
    ev["probes"] = probes;
    ev["affine"] = e.affine;
    ev["determinant"] = to_string(e.determinant);
    ev["closed_form_factor"] = scalar_to_json(e.closed_form_factor);
    ev["target_zero"] = e.target_zero;
    ev["lower_degrees_unchanged"] = e.lower_degrees_unchanged;
    ev["earlier_targets_unchanged"] = e.earlier_targets_unchanged;
    events.push_back(ev);
  }
  Json free = Json::array();
  for (const auto& e : r.gauge.free_parameters) free.push_back(event_json(e));
  Json refit = Json::array();
  for (const auto& e : r.gauge.refit_events) refit.push_back(event_json(e));
  return Json{{"invariants", invariants_to_json(r.invariants)},
              {"pass1", degrees},
              {"resonances", events},
              {"truncation_gauge",
               Json{{"free_parameters", free}, {"refit_events", refit}, {"pinned", r.gauge.pinned_coordinates}, {"rank", r.gauge.rank}, {"iterations", r.gauge.iterations}}},
              {"map_reproduces_normal_form", r.map_reproduces}};
}

Json verification_report(const VerificationReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.per_degree) degrees.push_back(Json{{"T", d.T}, {"residual", residual_json(d.residual)}, {"pass", d.pass}});
  Json targets = Json::array();
  for (const auto& t : r.resonance_targets) {
    targets.push_back(Json{{"k", t.k}, {"coefficient", scalar_to_json(t.coefficient)}, {"pass", t.pass}});
  }
  return Json{{"per_degree", degrees},
              {"resonance", r.resonance_applicable ? Json(targets) : Json("not applicable")},
              {"overall", r.overall}};
}

Json equivalence_report(const EquivalenceResult& r) {
  return Json{{"verdict", verdict_name(r.verdict)}, {"certificate", r.certificate}};
}

}  // namespace crnf
