#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "zxf/integer.hpp"

namespace zxf {

/// Dense polynomial in Z[x]. coefficients()[i] is the coefficient of x^i; the
/// leading stored coefficient is never zero, and the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t exponent);

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i, zero beyond the degree.
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }
    Integer constant_term() const { return coeff(0); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Horner evaluation, exact.
Integer eval(const IntPoly& f, const Integer& x);

/// Horner evaluation reduced mod m (m > 0), result in [0, m).
Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m);

IntPoly derivative(const IntPoly& f);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& f);

/// f / content(f), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// f with its leading coefficient made positive.
IntPoly with_positive_leading(IntPoly f);

/// f / g in Z[x]. Throws ContractViolation unless g divides f exactly.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);

/// Divides f by g in Z[x] if possible.
std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g);

/// lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// gcd in Z[x] via a primitive remainder sequence, positive leading coefficient.
IntPoly gcd_Z(const IntPoly& f, const IntPoly& g);

/// Resultant from the Sylvester matrix (fraction-free Bareiss elimination).
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant, normalized so that degree 2 gives b^2 - 4ac. Degree must be >= 1.
Integer discriminant(const IntPoly& f);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f), the resultant route for any degree >= 1.
Integer discriminant_by_resultant(const IntPoly& f);

/// f / gcd_Z(f, f') with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// f / x^t with t the multiplicity of the root 0; returns t too.
std::pair<IntPoly, std::size_t> strip_power_of_x(const IntPoly& f);

}  // namespace zxf
