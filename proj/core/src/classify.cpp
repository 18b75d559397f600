#include "zxf/classify.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "zxf/errors.hpp"
#include "zxf/series.hpp"

namespace zxf {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdictNames{{
    {Verdict::Unit, "Unit"},
    {Verdict::Irreducible, "Irreducible"},
    {Verdict::Reducible, "Reducible"},
    {Verdict::Inconclusive, "Inconclusive"},
}};

constexpr std::array<std::pair<Rule, std::string_view>, 12> kRuleNames{{
    {Rule::ConstantIsUnit, "ConstantIsUnit"},
    {Rule::PrimeConstant, "PrimeConstant"},
    {Rule::CoprimeLinearTerm, "CoprimeLinearTerm"},
    {Rule::LinearRule, "LinearRule"},
    {Rule::NotPrimePower, "NotPrimePower"},
    {Rule::IntegerContent, "IntegerContent"},
    {Rule::PowerOfXContent, "PowerOfXContent"},
    {Rule::NGreaterThan2M, "NGreaterThan2M"},
    {Rule::MultipleRootGcd, "MultipleRootGcd"},
    {Rule::SimplePAdicRoot, "SimplePAdicRoot"},
    {Rule::DegreeAtMost3NoRoot, "DegreeAtMost3NoRoot"},
    {Rule::SufficientConditionsExhausted, "SufficientConditionsExhausted"},
}};

Classification verdict(Verdict v, Rule r) {
    Classification c;
    c.verdict = v;
    c.rule = r;
    return c;
}

}  // namespace

std::string_view to_string(Verdict v) {
    for (const auto& [key, name] : kVerdictNames)
        if (key == v) return name;
    return "?";
}

std::string_view to_string(Rule r) {
    for (const auto& [key, name] : kRuleNames)
        if (key == r) return name;
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
    for (const auto& [key, name] : kVerdictNames)
        if (name == text) return key;
    return std::nullopt;
}

std::optional<Rule> parse_rule(std::string_view text) {
    for (const auto& [key, name] : kRuleNames)
        if (name == text) return key;
    return std::nullopt;
}

std::variant<NormalForm, NormalFormNotApplicable> normal_form(const IntPoly& source) {
    if (source.degree() < 1) throw DomainError("normal form needs a nonconstant polynomial");
    if (abs(source.constant_term()) < 2) throw DomainError("constant term 0 or +-1 is handled by the driver");

    const IntPoly f = source.constant_term() < 0 ? -source : source;
    const auto pp = as_prime_power(f.constant_term());
    if (!pp) {
        return NormalFormNotApplicable{NormalFormNotApplicable::Reason::ConstantNotPrimePower,
                                       "constant " + to_string(f.constant_term()) + " is not a prime power"};
    }
    const Prime p(pp->prime);
    const auto m = vp_or_infinite(f.coeff(1), p);
    if (m && *m == 0) {
        return NormalFormNotApplicable{NormalFormNotApplicable::Reason::LinearTermCoprime,
                                       "p does not divide the linear coefficient"};
    }
    const auto& c = f.coefficients();
    if (f.degree() >= 2 &&
        std::all_of(c.begin() + 2, c.end(), [&](const Integer& x) { return divides(p.value(), x); })) {
        return NormalFormNotApplicable{NormalFormNotApplicable::Reason::ContentDivisibleByP,
                                       "p divides every nonconstant coefficient"};
    }

    NormalForm nf{p, pp->exponent, m, {}, f};
    nf.gamma.assign(c.begin() + 1, c.end());
    if (m) nf.gamma[0] = divide_exact(c[1], p.power(*m));
    return nf;
}

Classification classify(const IntPoly& input) {
    if (input.is_zero()) throw DomainError("cannot classify the zero polynomial");

    if (is_unit(input)) return verdict(Verdict::Unit, Rule::ConstantIsUnit);

    if (input.constant_term() == 0) {
        auto [rest, t] = strip_power_of_x(input);
        auto residual = std::make_shared<const Classification>(classify(rest));
        // x is prime in Z[[x]], so x * unit is irreducible and everything else splits off x.
        const bool reducible = t >= 2 || !is_unit(rest);
        Classification c = verdict(reducible ? Verdict::Reducible : Verdict::Irreducible, Rule::PowerOfXContent);
        c.x_power = t;
        c.residual = std::move(residual);
        return c;
    }

    const IntPoly f = input.constant_term() < 0 ? -input : input;
    const Integer f0 = f.constant_term();

    const Integer cont = content(f);
    if (cont > 1 && !is_unit(Integer(f0 / cont))) {
        Classification c = verdict(Verdict::Reducible, Rule::IntegerContent);
        c.content = cont;
        return c;
    }

    if (is_prime(f0)) {
        Classification c = verdict(Verdict::Irreducible, Rule::PrimeConstant);
        c.p = f0;
        c.n = 1;
        return c;
    }

    const auto pp = as_prime_power(f0);
    if (!pp) return verdict(Verdict::Reducible, Rule::NotPrimePower);

    const Prime p(pp->prime);
    auto with_prime = [&](Verdict v, Rule r) {
        Classification c = verdict(v, r);
        c.p = p.value();
        c.n = pp->exponent;
        return c;
    };

    if (!divides(p.value(), f.coeff(1))) return with_prime(Verdict::Irreducible, Rule::CoprimeLinearTerm);
    if (f.degree() <= 1) return with_prime(Verdict::Reducible, Rule::LinearRule);

    auto form = normal_form(f);
    if (auto* na = std::get_if<NormalFormNotApplicable>(&form)) {
        ZXF_ENSURE(na->reason == NormalFormNotApplicable::Reason::ContentDivisibleByP,
                   "unexpected normal form failure: " + na->message);
        // f = p^n * unit with n >= 2.
        Classification c = with_prime(Verdict::Reducible, Rule::IntegerContent);
        c.content = cont;
        return c;
    }
    NormalForm nf = std::get<NormalForm>(std::move(form));

    if (nf.n_exceeds_2m()) {
        Classification c = with_prime(Verdict::Reducible, Rule::NGreaterThan2M);
        c.normal_form = std::move(nf);
        return c;
    }

    const IntPoly G = gcd_Z(f, derivative(f));
    if (G.degree() >= 1 && !is_unit(G) && !is_unit(divide_exact(f, G))) {
        Classification c = with_prime(Verdict::Reducible, Rule::MultipleRootGcd);
        c.gcd_factor = G;
        c.normal_form = std::move(nf);
        return c;
    }

    // Every root of f has valuation <= n, so precision n + 1 pins it down.
    const auto roots = roots_in_Zp(f, p, nf.n + 1);
    for (const auto& root : roots) {
        ZXF_ENSURE(root.valuation.has_value(), "root of f with f(0) != 0 read as zero");
        if (!root.simple || *root.valuation == 0) continue;
        // Sorted by (valuation, residue): the first hit is the canonical choice.
        Classification c = with_prime(Verdict::Reducible, Rule::SimplePAdicRoot);
        c.ell = *root.valuation;
        c.root = root;
        c.normal_form = std::move(nf);
        return c;
    }

    Classification c = f.degree() <= 3 ? with_prime(Verdict::Irreducible, Rule::DegreeAtMost3NoRoot)
                                       : with_prime(Verdict::Inconclusive, Rule::SufficientConditionsExhausted);
    c.normal_form = std::move(nf);
    return c;
}

}  // namespace zxf
