#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zxf/integer.hpp"
#include "zxf/padic.hpp"
#include "zxf/polynomial.hpp"

namespace zxf {

/// f = p^n + p^m g1 x + g2 x^2 + ... + gd x^d with gcd(p, g1) = 1 or g1 = 0,
/// and gcd(p, g2, ..., gd) = 1.
struct NormalForm {
    Prime p;
    unsigned long n = 0;
    /// vp of the linear coefficient; nullopt when g1 = 0 (m taken as large as needed).
    std::optional<unsigned long> m;
    /// gamma[0] = g1, ..., gamma[d-1] = gd.
    std::vector<Integer> gamma;
    /// The polynomial the form was read from, with positive constant term.
    IntPoly poly;

    unsigned long degree() const { return static_cast<unsigned long>(gamma.size()); }
    /// g_k for 1 <= k <= d.
    const Integer& g(unsigned long k) const { return gamma.at(k - 1); }
    /// n > 2m with m finite.
    bool n_exceeds_2m() const { return m && n > 2 * *m; }
};

struct NormalFormNotApplicable {
    enum class Reason { ConstantNotPrimePower, ContentDivisibleByP, LinearTermCoprime };
    Reason reason;
    std::string message;
};

/// Reads the normal form off f. f must be nonconstant with |f(0)| >= 2
/// (DomainError otherwise, since those cases are decided before a normal form is needed).
std::variant<NormalForm, NormalFormNotApplicable> normal_form(const IntPoly& f);

enum class Verdict { Unit, Irreducible, Reducible, Inconclusive };

enum class Rule {
    ConstantIsUnit,
    PrimeConstant,
    CoprimeLinearTerm,
    LinearRule,
    NotPrimePower,
    IntegerContent,
    PowerOfXContent,
    NGreaterThan2M,
    MultipleRootGcd,
    SimplePAdicRoot,
    DegreeAtMost3NoRoot,
    SufficientConditionsExhausted,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Rule r);
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<Rule> parse_rule(std::string_view text);

struct Classification {
    Verdict verdict = Verdict::Inconclusive;
    Rule rule = Rule::SufficientConditionsExhausted;

    /// Prime and exponent of |f(0)| when it is a prime power.
    std::optional<Integer> p;
    std::optional<unsigned long> n;
    std::optional<NormalForm> normal_form;
    /// Valuation and root behind SimplePAdicRoot.
    std::optional<unsigned long> ell;
    std::optional<PAdicRoot> root;
    /// gcd(f, f') behind MultipleRootGcd.
    std::optional<IntPoly> gcd_factor;
    /// Integer content behind IntegerContent.
    std::optional<Integer> content;
    /// For PowerOfXContent: f = x^t h, with h classified separately.
    std::optional<std::size_t> x_power;
    std::shared_ptr<const Classification> residual;
};

/// Decides whether f is a unit, irreducible or reducible in Z[[x]]; the first
/// rule of the decision ladder that applies is reported. Throws DomainError for f = 0.
Classification classify(const IntPoly& f);

}  // namespace zxf
