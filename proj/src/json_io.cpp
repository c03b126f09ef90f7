#include "torsion/json_io.hpp"

#include "torsion/errors.hpp"

namespace torsion {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

long integer_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw InvalidInput(std::string("field '") + key + "' must be an integer");
    }
    return v.get<long>();
}

std::string string_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_string()) {
        throw InvalidInput(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

template <class F>
json poly_to_json(const Poly<F>& f)
{
    json out = json::array();
    for (const auto& c : f.coefficients()) {
        out.push_back(to_json(c));
    }
    return out;
}

template <class F, class Parse>
Poly<F> poly_from_json(const json& j, Parse parse)
{
    if (!j.is_array()) {
        throw InvalidInput("polynomial must be a JSON array");
    }
    std::vector<F> c;
    for (const auto& item : j) {
        c.push_back(parse(item));
    }
    return Poly<F>(std::move(c));
}

} // namespace

json to_json(const Rational& q)
{
    return q.to_string();
}

json to_json(const GaussianRational& z)
{
    if (z.is_rational()) {
        return to_json(z.re());
    }
    return json{{"re", z.re().to_string()}, {"im", z.im().to_string()}};
}

json to_json(const QPoly& f)
{
    return poly_to_json(f);
}

json to_json(const GPoly& f)
{
    return poly_to_json(f);
}

json to_json(const CurveModel& curve)
{
    return json{{"d", curve.d}, {"n", curve.n}, {"f", to_json(curve.f)}};
}

json to_json(const TorsionCertificate& cert)
{
    json point;
    if (const auto* p = std::get_if<AffinePoint<GaussianRational>>(&cert.point)) {
        point = json{{"x", to_json(p->x)}, {"y", to_json(p->y)}};
    } else {
        point = json{{"x", to_json(std::get<SymbolicPoint>(cert.point).x)}, {"symbolic", true}};
    }
    json j{
        {"curve", to_json(cert.curve)},
        {"point", point},
        {"m", cert.m},
        {"identity_kind", std::string(to_string(cert.identity_kind))},
        {"u", to_json(cert.u)},
        {"v", to_json(cert.v)},
        {"a", to_json(cert.a)},
        {"e", cert.e},
        {"lambda", cert.lambda ? to_json(*cert.lambda) : json(nullptr)},
        {"exactness_rule", std::string(to_string(cert.exactness_rule))},
    };
    if (!cert.cofactor.is_zero()) {
        j["cofactor"] = to_json(cert.cofactor);
    }
    return j;
}

json to_json(const Verdict& verdict)
{
    auto optional = [](const std::optional<long>& v) { return v ? json(*v) : json(nullptr); };
    return json{
        {"n", verdict.n},
        {"d", verdict.d},
        {"m", verdict.m},
        {"status", std::string(to_string(verdict.status))},
        {"deciding_rule", verdict.deciding_rule},
        {"characteristic_note", verdict.characteristic_note},
        {"detail",
         {{"k", verdict.detail.k},
          {"j", optional(verdict.detail.j)},
          {"ell", optional(verdict.detail.ell)},
          {"m0", verdict.detail.m0},
          {"ell0", verdict.detail.ell0},
          {"m1", verdict.detail.m1},
          {"e", optional(verdict.detail.e)}}},
    };
}

json to_json(const VerificationReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return json{{"ok", report.ok}, {"checks", checks}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw InvalidInput("rational must be a \"p/q\" string");
}

GaussianRational gaussian_from_json(const json& j)
{
    if (j.is_object()) {
        return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
    }
    return GaussianRational(rational_from_json(j));
}

QPoly qpoly_from_json(const json& j)
{
    return poly_from_json<Rational>(j, rational_from_json);
}

GPoly gpoly_from_json(const json& j)
{
    return poly_from_json<GaussianRational>(j, gaussian_from_json);
}

CurveModel curve_from_json(const json& j)
{
    return {integer_field(j, "d"), integer_field(j, "n"), gpoly_from_json(field(j, "f"))};
}

TorsionCertificate certificate_from_json(const json& j)
{
    TorsionCertificate cert;
    cert.curve = curve_from_json(field(j, "curve"));

    const json& point = field(j, "point");
    const GaussianRational x = gaussian_from_json(field(point, "x"));
    if (point.contains("symbolic")) {
        if (!point.at("symbolic").is_boolean() || !point.at("symbolic").get<bool>()) {
            throw InvalidInput("'symbolic' must be true when present");
        }
        cert.point = SymbolicPoint{x};
    } else {
        cert.point = AffinePoint<GaussianRational>{x, gaussian_from_json(field(point, "y"))};
    }

    cert.m = integer_field(j, "m");
    auto kind = parse_identity_kind(string_field(j, "identity_kind"));
    if (!kind) {
        throw InvalidInput("unknown identity_kind");
    }
    cert.identity_kind = *kind;
    cert.u = gpoly_from_json(field(j, "u"));
    cert.v = gpoly_from_json(field(j, "v"));
    cert.a = gaussian_from_json(field(j, "a"));
    cert.e = integer_field(j, "e");
    const json& lambda = field(j, "lambda");
    if (!lambda.is_null()) {
        cert.lambda = gaussian_from_json(lambda);
    }
    auto rule = parse_exactness_rule(string_field(j, "exactness_rule"));
    if (!rule) {
        throw InvalidInput("unknown exactness_rule");
    }
    cert.exactness_rule = *rule;
    if (j.contains("cofactor")) {
        cert.cofactor = gpoly_from_json(j["cofactor"]);
    }
    return cert;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace torsion
