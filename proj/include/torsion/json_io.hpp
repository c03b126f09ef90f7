#pragma once

#include <string>

#include "json.hpp"

#include "torsion/certificate.hpp"
#include "torsion/poly.hpp"
#include "torsion/scalars.hpp"
#include "torsion/verdict.hpp"

// JSON interchange. Rationals are decimal strings "p/q" (or "p" for
// integers); Gaussian rationals with a nonzero imaginary part are
// {"re": "p/q", "im": "p/q"}; polynomials are arrays of coefficients in
// ascending degree. Parsers throw InvalidInput on malformed data.

namespace torsion {

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const GaussianRational& z);
json to_json(const QPoly& f);
json to_json(const GPoly& f);
json to_json(const CurveModel& curve);
json to_json(const TorsionCertificate& cert);
json to_json(const Verdict& verdict);
json to_json(const VerificationReport& report);

Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);
QPoly qpoly_from_json(const json& j);
GPoly gpoly_from_json(const json& j);
CurveModel curve_from_json(const json& j);
TorsionCertificate certificate_from_json(const json& j);

/// Stable textual form: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

} // namespace torsion
