#pragma once

#include <optional>
#include <vector>

#include "zxf/errors.hpp"
#include "zxf/integer.hpp"
#include "zxf/polynomial.hpp"

namespace zxf {

/// A rational prime, checked at construction.
class Prime {
public:
    explicit Prime(Integer value);
    explicit Prime(unsigned long value) : Prime(Integer(value)) {}

    const Integer& value() const { return value_; }
    Integer power(unsigned long exponent) const { return zxf::pow(value_, exponent); }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    Integer value_;
};

/// Largest e with p^e | n. Throws DomainError for n = 0.
unsigned long vp(const Integer& n, const Prime& p);

/// vp(n), or nullopt when n = 0.
std::optional<unsigned long> vp_or_infinite(const Integer& n, const Prime& p);

/// A root of an integer polynomial in Z_p, known modulo p^precision.
struct PAdicRoot {
    Prime prime;
    Integer residue;  ///< canonical, in [0, p^precision)
    unsigned long precision = 0;
    /// vp of the root; nullopt means residue == 0, i.e. the valuation is at least `precision`.
    std::optional<unsigned long> valuation;
    bool simple = false;
    /// vp(f'(root)) for simple roots; f(residue) = 0 mod p^(2 theta + 1) holds.
    std::optional<unsigned long> theta;

    Integer modulus() const { return prime.power(precision); }
};

/// Thrown by hensel_lift when f(r0) = 0 mod p^(2 theta + 1) fails.
class HenselError : public DomainError {
public:
    HenselError(std::optional<unsigned long> theta, std::optional<unsigned long> value_valuation);

    /// vp(f'(r0)); nullopt when f'(r0) = 0.
    std::optional<unsigned long> theta;
    /// vp(f(r0)); nullopt when f(r0) = 0.
    std::optional<unsigned long> value_valuation;
};

/// Lifts the approximate root r0 to the residue mod p^K of the unique root
/// alpha in Z_p with alpha = r0 mod p^(theta + 1), theta = vp(f'(r0)).
///
/// Requires f(r0) = 0 mod p^(2 theta + 1); otherwise throws HenselError.
/// The result is canonical in [0, p^K).
Integer hensel_lift(const IntPoly& f, const Integer& r0, const Prime& p, unsigned long K);

/// 2 vp(Res(g, g')) + 1 for a squarefree g of degree >= 1. Every residue r mod
/// p^depth with g(r) = 0 mod p^depth satisfies the Hensel condition.
unsigned long decision_depth(const IntPoly& squarefree, const Prime& p);

/// All roots of f in Z_p, one entry per distinct root, sorted by (valuation, residue).
///
/// Roots are reported to precision K, raised to 2 theta + 1 for simple roots
/// whose Hensel witness needs more digits. `simple` tells whether the root is
/// a simple root of f itself (multiple roots are found through the
/// squarefree part). Throws DomainError for f = 0 or K = 0.
std::vector<PAdicRoot> roots_in_Zp(const IntPoly& f, const Prime& p, unsigned long K);

}  // namespace zxf
