#pragma once

#include "crnf/verifier.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace crnf {

using Json = nlohmann::json;

inline constexpr const char* kSurfaceFormat = "cr-surface/1";
inline constexpr const char* kMapFormat = "cr-map/1";
inline constexpr const char* kPolyFormat = "cr-poly/1";
inline constexpr const char* kReportFormat = "cr-report/1";

/// Parse failures throw Error(ParseError) naming the offending field.
Json parse_json_text(const std::string& text);

SurfaceJet surface_from_json(const Json& j);
Json surface_to_json(const SurfaceJet& s);

TangentIdentityMap map_from_json(const Json& j);
Json map_to_json(const TangentIdentityMap& m);

/// Either a cr-poly/1 file or the model of a cr-surface/1 file.
Poly poly_from_json(const Json& j);
Json poly_to_json(const Poly& p);

Json scalar_to_json(const ExactScalar& c);

/// "1/2*z^2*zbar - 1/2*z*zbar^2"; "0" for the zero polynomial.
std::string poly_text(const Poly& p, const std::string& x = "z", const std::string& y = "zbar");

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

Json invariants_to_json(const SurfaceInvariants& inv);
Json normalization_report(const NormalizationResult& r);
Json verification_report(const VerificationReport& r);
Json equivalence_report(const EquivalenceResult& r);
Json audit_flags();

}  // namespace crnf
