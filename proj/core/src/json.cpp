#include "zxf/json.hpp"

#include <string>

#include "zxf/errors.hpp"

namespace zxf {

namespace {

Json array_of(const std::vector<Integer>& coeffs) {
    Json out = Json::array();
    for (const auto& c : coeffs) out.push_back(to_string(c));
    return out;
}

}  // namespace

Json to_json(const IntPoly& f) { return array_of(f.coefficients()); }

Json to_json(const TruncatedSeries& s) { return array_of(s.coefficients()); }

Json to_json(const PAdicRoot& root) {
    Json j{{"prime", to_string(root.prime.value())},
           {"residue", to_string(root.residue)},
           {"precision", std::to_string(root.precision)},
           {"simple", root.simple}};
    if (root.valuation)
        j["valuation"] = std::to_string(*root.valuation);
    else
        j["valuation_at_least"] = std::to_string(root.precision);
    if (root.theta) j["theta"] = std::to_string(*root.theta);
    return j;
}

Json to_json(const Classification& c) {
    Json j{{"verdict", std::string(to_string(c.verdict))}, {"rule", std::string(to_string(c.rule))}};
    if (c.p) j["p"] = to_string(*c.p);
    if (c.n) j["n"] = std::to_string(*c.n);
    if (c.normal_form) j["m"] = c.normal_form->m ? std::to_string(*c.normal_form->m) : std::string("inf");
    if (c.ell) j["ell"] = std::to_string(*c.ell);
    if (c.root) {
        j["root_residue"] = to_string(c.root->residue);
        j["root_precision"] = std::to_string(c.root->precision);
    }
    if (c.content) j["content"] = to_string(*c.content);
    if (c.gcd_factor) j["gcd_factor"] = to_json(*c.gcd_factor);
    if (c.x_power) j["x_power"] = std::to_string(*c.x_power);
    if (c.residual) j["residual"] = to_json(*c.residual);
    return j;
}

Json to_json(const FactorizationCertificate& cert) {
    Json witnesses = Json::object();
    for (const auto& [key, value] : cert.witnesses) witnesses[key] = value;
    return Json{{"input", to_json(cert.input)},
                {"A", to_json(cert.a)},
                {"B", to_json(cert.b)},
                {"order", std::to_string(cert.order)},
                {"rule", std::string(to_string(cert.rule))},
                {"witnesses", std::move(witnesses)},
                {"product_check", verify_certificate(cert)}};
}

std::vector<Integer> coefficients_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("expected a JSON array of integers");
    std::vector<Integer> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string())
            out.push_back(parse_integer(item.get<std::string>()));
        else if (item.is_number_integer())
            out.push_back(parse_integer(item.dump()));
        else
            throw DomainError("coefficient is neither a decimal string nor an integer: " + item.dump());
    }
    return out;
}

IntPoly poly_from_json(const Json& j) { return IntPoly(coefficients_from_json(j)); }

}  // namespace zxf
