#include "crnf/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace crnf;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kDegenerate = 3, kSolver = 4, kUndecided = 5 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, path + ": cannot write");
  out << text;
}

SurfaceJet load_surface(const std::string& path) { return surface_from_json(parse_json_text(read_file(path))); }

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NondegeneracyViolated: return kDegenerate;
    case ErrorCode::DegreeSystemInconsistent:
    case ErrorCode::DegreeSystemUnderdetermined:
    case ErrorCode::ResonanceNonAffine:
    case ErrorCode::ResonanceSingular:
    case ErrorCode::LowerDegreeDisturbed: return kSolver;
    default: return kInvalid;
  }
}

void print_invariants(const SurfaceJet& s, const SurfaceInvariants& inv) {
  std::cout << "k0 = " << s.k0() << "\n";
  std::cout << "s = " << (inv.s ? std::to_string(*inv.s) : std::string("infinite")) << "\n";
  std::cout << "alpha = " << inv.alpha << "\n";
  std::cout << "R = " << poly_text(inv.alpha_remainder) << "\n";
  const bool has_s = inv.s.has_value();
  auto has = [&](Degeneracy d) { return std::find(inv.reasons.begin(), inv.reasons.end(), d) != inv.reasons.end(); };
  std::cout << "s finite: " << (has_s ? "yes" : "no") << "\n";
  if (has_s) {
    std::cout << "alpha != 0: " << (has(Degeneracy::AlphaZero) ? "no" : "yes") << "\n";
    std::cout << "alpha != s: " << (has(Degeneracy::AlphaEqualsS) ? "no" : "yes") << "\n";
    std::cout << "alpha^2 != 0: " << (has(Degeneracy::AlphaSquaredZero) ? "no" : "yes") << "\n";
    std::cout << "alpha^2 != s: " << (has(Degeneracy::AlphaSquaredEqualsS) ? "no" : "yes") << "\n";
  }
  for (auto r : inv.reasons) std::cout << "reason: " << degeneracy_name(r) << "\n";
  std::cout << (inv.nondegenerate ? "nondegenerate" : "degenerate") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal normal forms of real surfaces near degenerate CR singularities"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string in_a;
  std::string in_b;
  std::string out_prefix;
  std::string mode = "tangent";
  int degree = -1;
  int k0 = 0;
  int s = 0;
  int gamma = 0;
  int beta = 0;

  auto* analyze = app.add_subcommand("analyze", "Invariants s, alpha and nondegeneracy");
  analyze->add_option("surface", in_a)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Compute the normal form");
  normalize_cmd->add_option("surface", in_a)->required();
  normalize_cmd->add_option("--degree", degree, "Truncation degree");
  normalize_cmd->add_option("--out", out_prefix, "Output prefix")->required();

  auto* verify = app.add_subcommand("verify", "Check the normalization conditions");
  verify->add_option("surface", in_a)->required();

  auto* apply = app.add_subcommand("apply-map", "Apply a tangent-to-identity map");
  apply->add_option("surface", in_a)->required();
  apply->add_option("map", in_b)->required();
  apply->add_option("--out", out_prefix, "Output file");

  auto* equiv = app.add_subcommand("equiv", "Formal equivalence of two surfaces");
  equiv->add_option("a", in_a)->required();
  equiv->add_option("b", in_b)->required();
  equiv->add_option("--mode", mode)->check(CLI::IsMember({"tangent", "linear"}));

  auto* fischer = app.add_subcommand("fischer", "Fischer decomposition q = S P + T");
  fischer->add_option("model", in_a)->required();
  fischer->add_option("poly", in_b)->required();

  auto* weight = app.add_subcommand("weight", "Pseudo-weight of z^gamma zbar^beta");
  weight->add_option("--k0", k0)->required();
  weight->add_option("--s", s)->required();
  weight->add_option("gamma", gamma)->required();
  weight->add_option("beta", beta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  const bool json = format == "json";

  try {
    if (*analyze) {
      const auto surf = load_surface(in_a);
      const auto inv = surface_invariants(surf);
      if (json) {
        Json j = invariants_to_json(inv);
        j["k0"] = surf.k0();
        j["format"] = kReportFormat;
        std::cout << dump(j);
      } else {
        print_invariants(surf, inv);
      }
      return inv.nondegenerate ? kOk : kDegenerate;
    }

    if (*normalize_cmd) {
      auto surf = load_surface(in_a);
      if (degree != -1) {
        if (degree < surf.k0() + 1) throw Error(ErrorCode::PreconditionViolated, "--degree must be at least k0+1");
        if (degree > surf.order) throw Error(ErrorCode::PreconditionViolated, "--degree exceeds the degree of the input");
        surf = truncate_surface(surf, degree);
      }
      Json report{{"format", kReportFormat}, {"audit", audit_flags()}};
      try {
        const auto res = normalize(surf);
        report.update(normalization_report(res));
        report["exit_status"] = kOk;
        write_file(out_prefix + ".normal.json", dump(surface_to_json(res.normal_form)));
        write_file(out_prefix + ".map.json", dump(map_to_json(res.map)));
        write_file(out_prefix + ".report.json", dump(report));
        if (json) {
          std::cout << dump(report);
        } else {
          std::cout << "s = " << *res.invariants.s << ", alpha = " << res.invariants.alpha << "\n";
          for (const auto& e : res.resonances) {
            std::cout << "resonance k = " << e.event.degree << " case " << (e.event.kind == ResonanceCase::A ? "A" : "B")
                      << " t = " << e.event.t << " a = " << e.event.a << "\n";
          }
          std::cout << "wrote " << out_prefix << ".normal.json, .map.json, .report.json\n";
        }
        return kOk;
      } catch (const Error& e) {
        const int code = exit_for(e);
        report["error"] = Json{{"code", error_name(e.code())}, {"message", e.what()}};
        report["exit_status"] = code;
        write_file(out_prefix + ".report.json", dump(report));
        throw;
      }
    }

    if (*verify) {
      const auto rep = verify_normal_form(load_surface(in_a));
      if (json) {
        Json j = verification_report(rep);
        j["format"] = kReportFormat;
        std::cout << dump(j);
      } else {
        for (const auto& d : rep.per_degree) {
          std::cout << "degree " << d.T << ": " << (d.pass ? "pass" : "FAIL");
          if (!d.pass) {
            for (const auto& x : d.residual) std::cout << " " << x;
          }
          std::cout << "\n";
        }
        if (!rep.resonance_applicable) std::cout << "resonance targets: not applicable\n";
        for (const auto& t : rep.resonance_targets) {
          std::cout << "a_{0," << t.k << "} = " << t.coefficient << ": " << (t.pass ? "pass" : "FAIL") << "\n";
        }
        std::cout << (rep.overall ? "normal form verified" : "not a normal form") << "\n";
      }
      return rep.overall ? kOk : kNegative;
    }

    if (*apply) {
      const auto surf = load_surface(in_a);
      const auto m = map_from_json(parse_json_text(read_file(in_b)));
      const std::string text = dump(surface_to_json(apply_map(m, surf)));
      if (out_prefix.empty()) {
        std::cout << text;
      } else {
        write_file(out_prefix, text);
      }
      return kOk;
    }

    if (*equiv) {
      const auto res = equiv_check(load_surface(in_a), load_surface(in_b), mode == "linear" ? EquivMode::Linear : EquivMode::Tangent);
      if (json) {
        Json j = equivalence_report(res);
        j["format"] = kReportFormat;
        std::cout << dump(j);
      } else {
        std::cout << verdict_name(res.verdict) << "\n";
        for (const auto& c : res.certificate) std::cout << "  " << c << "\n";
      }
      if (res.verdict == Verdict::Equivalent) return kOk;
      return res.verdict == Verdict::Inequivalent ? kNegative : kUndecided;
    }

    if (*fischer) {
      const Poly p = poly_from_json(parse_json_text(read_file(in_a)));
      const Poly q = poly_from_json(parse_json_text(read_file(in_b)));
      const auto split = fischer_decompose(p, q);
      Json j{{"format", kReportFormat}, {"S", poly_text(split.quotient)}, {"T", poly_text(split.remainder)}};
      if (!q.is_zero_poly() && q.degree() > p.degree()) {
        Json r = Json::array();
        for (const auto& x : sN_residual(p, q)) r.push_back(scalar_to_json(x));
        j["sN_residual"] = r;
      }
      if (json) {
        std::cout << dump(j);
      } else {
        std::cout << "S = " << poly_text(split.quotient) << "\n";
        std::cout << "R = " << poly_text(split.remainder) << "\n";
        if (j.contains("sN_residual")) std::cout << "in S_N: " << (all_zero(sN_residual(p, q)) ? "yes" : "no") << "\n";
      }
      return kOk;
    }

    if (*weight) {
      PseudoWeightTable table(k0, s);
      const Rational w = table(gamma, beta);
      if (json) {
        std::cout << dump(Json{{"format", kReportFormat}, {"gamma", gamma}, {"beta", beta}, {"weight", to_string(w)}});
      } else {
        std::cout << to_string(w) << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kInvalid;
}
