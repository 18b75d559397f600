#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zxf {

using Integer = mpz_class;

Integer pow(const Integer& base, unsigned long exponent);

/// Canonical residue of a in [0, m); m > 0.
Integer mod(const Integer& a, const Integer& m);

/// Least absolute residue of a mod m: in (-m/2, m/2], ties go to the nonnegative side.
Integer least_abs_residue(const Integer& a, const Integer& m);

/// Inverse of a mod m; throws DomainError if gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

/// a / b, throwing ContractViolation when b does not divide a.
Integer divide_exact(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& a);

/// Deterministic for |n| < 2^64 (BPSW); probabilistic with 50 rounds beyond.
bool is_prime(const Integer& n);

/// n = p^k with p prime and k >= 1. n must be positive.
struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;
};
std::optional<PrimePower> as_prime_power(const Integer& n);

/// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n);

Integer smallest_prime_factor(const Integer& n);

std::string to_string(const Integer& n);
Integer parse_integer(const std::string& text);

inline bool is_unit(const Integer& n) { return n == 1 || n == -1; }

}  // namespace zxf
