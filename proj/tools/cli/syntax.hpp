#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "zxf/errors.hpp"
#include "zxf/polynomial.hpp"
#include "zxf/series.hpp"

namespace zxf::cli {

class ParseError : public DomainError {
public:
    ParseError(std::string message, std::size_t position);
    /// 0-based offset into the source text.
    std::size_t position;
};

inline constexpr unsigned long kDefaultExponentCap = 1'000'000;

/// Parses "3 - 2x + x^2", "x^2 + x^2" (summed), or a coefficient list "[c0, c1, ...]".
IntPoly parse_polynomial(std::string_view text, unsigned long exponent_cap = kDefaultExponentCap);

/// Canonical text, ascending degree: "49 + 98x + 63x^2 + 14x^3 + x^4"; "0" for zero.
std::string render(const IntPoly& f);

/// render() of the stored coefficients followed by " + O(x^N)".
std::string render(const TruncatedSeries& s);

}  // namespace zxf::cli
