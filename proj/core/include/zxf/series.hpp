#pragma once

#include <cstddef>
#include <vector>

#include "zxf/integer.hpp"
#include "zxf/polynomial.hpp"

namespace zxf {

inline constexpr std::size_t kDefaultOrder = 64;

/// An element of Z[[x]] known modulo x^order. All `order` coefficients are
/// stored, zeros included.
class TruncatedSeries {
public:
    /// The zero series of the given order (>= 1).
    explicit TruncatedSeries(std::size_t order);
    /// Takes the first `order` coefficients, padding with zeros.
    TruncatedSeries(std::vector<Integer> coefficients, std::size_t order);
    /// Embedding of a polynomial, truncated mod x^order.
    static TruncatedSeries from_poly(const IntPoly& f, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    Integer& operator[](std::size_t i) { return coeffs_[i]; }

    TruncatedSeries truncated(std::size_t order) const;
    /// The polynomial with the same coefficients.
    IntPoly to_poly() const { return IntPoly(coeffs_); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Cauchy product mod x^min(order A, order B).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Inverse of a unit (constant term +-1). Throws DomainError otherwise.
TruncatedSeries invert_unit(const TruncatedSeries& u);

/// Coefficientwise equality on indices 0 .. n-1. Both orders must be >= n.
bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);

bool is_unit(const TruncatedSeries& f);
bool is_unit(const IntPoly& f);

}  // namespace zxf
