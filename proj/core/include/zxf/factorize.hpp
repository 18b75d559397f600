#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zxf/classify.hpp"
#include "zxf/padic.hpp"
#include "zxf/polynomial.hpp"
#include "zxf/series.hpp"

namespace zxf {

/// A proper factorization f = A B mod x^order, with the data used to build it.
struct FactorizationCertificate {
    IntPoly input;
    TruncatedSeries a{1};
    TruncatedSeries b{1};
    std::size_t order = 0;
    Rule rule = Rule::SufficientConditionsExhausted;
    /// Rule-specific witnesses (root, ell, theta, gcd factor, ...), as decimal text.
    std::vector<std::pair<std::string, std::string>> witnesses;

    const std::string* witness(std::string_view name) const;
};

/// True iff A B = input mod x^order and neither A(0) nor B(0) is +-1.
bool verify_certificate(const FactorizationCertificate& cert);

/// A, B with A(0) = u, B(0) = v and A B = f mod x^order, for coprime u v = f(0)
/// with |u|, |v| > 1. Each a_k is the least absolute residue solving
/// v a_k + u b_k = f_k - sum_{0<i<k} a_i b_{k-i}.
std::pair<TruncatedSeries, TruncatedSeries> factor_coprime_constant(const IntPoly& f, const Integer& u,
                                                                    const Integer& v, std::size_t order);

/// Factorization with A(0) = p^m, B(0) = p^(n-m) for normal forms with n > 2m.
/// Throws NotApplicable otherwise.
std::pair<TruncatedSeries, TruncatedSeries> factor_n_gt_2m(const NormalForm& nf, std::size_t order);

/// (G, f / G) with G = gcd_Z(f, f'); throws NotApplicable unless both constant terms are non-units.
std::pair<IntPoly, IntPoly> factor_multiple_root(const IntPoly& f);

/// The auxiliary polynomials g_d, ..., g_2 attached to a normal form and a valuation ell:
/// g_d(x) = sum_i (-1)^i f_{d-i} p^((d-i-2) ell) x^i and
/// g_k(x) = (p^((k-1) ell) gamma_{k+1} - g_{k+1}(x)) / x.
struct GkTower {
    unsigned long ell = 0;
    unsigned long degree = 0;
    /// polys[k] = g_k for 2 <= k <= degree; lower slots are empty.
    std::vector<IntPoly> polys;

    const IntPoly& g(unsigned long k) const { return polys.at(k); }
};

GkTower gk_tower(const NormalForm& nf, unsigned long ell);

/// Coefficient sequences of the simple-root construction; every vector is indexed
/// by the subscript it carries (a[k] = a_k), unused low slots hold zero.
struct FactorizationState {
    std::vector<Integer> a, b, s, t, R;
    unsigned long ell = 0;
    unsigned long theta = 0;
    unsigned long degree = 0;
    /// Highest j for which a_{d+j}, t_{d+j}, s_{d+1+j} were produced.
    std::size_t last_j = 0;
    /// Number of divisibility conditions checked at runtime.
    std::size_t checks = 0;
};

struct SimpleRootFactorization {
    FactorizationCertificate certificate;
    FactorizationState state;
    GkTower tower;
};

/// Factorization f = (p^ell + a_1 x + ...)(p^(n-ell) + b_1 x + ...) from a simple
/// root of valuation ell >= 1, for normal forms with n <= 2m or g1 = 0.
/// Throws NotApplicable when the root or the form does not qualify.
SimpleRootFactorization construct_simple_root_factorization(const NormalForm& nf, const PAdicRoot& root,
                                                           std::size_t order);

FactorizationCertificate factor_simple_root(const NormalForm& nf, const PAdicRoot& root, std::size_t order);

/// Thrown when neither factor has a linear coefficient prime to p.
class NotNormalizable : public NotApplicable {
public:
    using NotApplicable::NotApplicable;
};

/// Rewrites A B (A(0) = p^ell, B(0) = p^(n-ell)) as A' B' with the same product,
/// A'(0) = p^ell and a'_2 = ... = a'_k = 0, multiplying by units 1 + u_1 x + ...
/// If p | a_1 but 2 ell = n and p does not divide b_1, the factors are swapped first.
std::pair<TruncatedSeries, TruncatedSeries> normalize_factorization(const TruncatedSeries& a,
                                                                    const TruncatedSeries& b,
                                                                    std::size_t k);

struct RecoveredRoot {
    Prime prime;
    Integer residue;  ///< in [0, p^precision)
    unsigned long precision = 0;
    unsigned long valuation = 0;
};

/// Reads a root of valuation ell off a factorization of a normal-form polynomial
/// with n <= 2m and gcd(p, g2, g3) = 1, to precision K ell.
RecoveredRoot recover_root_from_factorization(const FactorizationCertificate& cert, unsigned long K);

/// Polynomial factors of a quadratic or cubic with a double root, from the closed
/// formulas; nullopt when they do not apply.
std::optional<std::pair<IntPoly, IntPoly>> closed_form_double_root(const NormalForm& nf);

struct FactorOutcome {
    Classification classification;
    /// Present iff the verdict is Reducible.
    std::optional<FactorizationCertificate> certificate;
};

/// Classifies f and, when reducible, builds and verifies a certificate of the given order.
FactorOutcome factor(const IntPoly& f, std::size_t order = kDefaultOrder);

}  // namespace zxf
