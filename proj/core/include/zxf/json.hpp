#pragma once

#include <nlohmann/json.hpp>

#include "zxf/classify.hpp"
#include "zxf/factorize.hpp"
#include "zxf/padic.hpp"
#include "zxf/polynomial.hpp"
#include "zxf/series.hpp"

namespace zxf {

using Json = nlohmann::json;

/// Coefficient arrays, lowest degree first, every integer as a decimal string.
Json to_json(const IntPoly& f);
Json to_json(const TruncatedSeries& s);
Json to_json(const PAdicRoot& root);
Json to_json(const Classification& c);
Json to_json(const FactorizationCertificate& cert);

/// Reads a coefficient array. Entries may be decimal strings or JSON integers.
/// Throws DomainError on anything else.
std::vector<Integer> coefficients_from_json(const Json& j);
IntPoly poly_from_json(const Json& j);

}  // namespace zxf
