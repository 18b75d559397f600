#include "zxf/factorize.hpp"

#include <algorithm>
#include <utility>

#include "zxf/errors.hpp"

namespace zxf {

const std::string* FactorizationCertificate::witness(std::string_view name) const {
    for (const auto& [key, value] : witnesses)
        if (key == name) return &value;
    return nullptr;
}

bool verify_certificate(const FactorizationCertificate& cert) {
    if (cert.order == 0 || cert.a.order() < cert.order || cert.b.order() < cert.order) return false;
    if (is_unit(cert.a) || is_unit(cert.b)) return false;
    return equal_mod(mul(cert.a, cert.b), TruncatedSeries::from_poly(cert.input, cert.order), cert.order);
}

std::pair<TruncatedSeries, TruncatedSeries> factor_coprime_constant(const IntPoly& f, const Integer& u,
                                                                    const Integer& v, std::size_t order) {
    if (u * v != f.constant_term()) throw DomainError("u * v must equal the constant term");
    if (abs(u) < 2 || abs(v) < 2) throw DomainError("u and v must both be non-units");
    Integer g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    if (g != 1) throw DomainError("u and v must be coprime");

    const Integer mu = abs(u);
    const Integer v_inv = inverse_mod(v, mu);
    TruncatedSeries A(order), B(order);
    A[0] = u;
    B[0] = v;
    for (std::size_t k = 1; k < order; ++k) {
        Integer rhs = f.coeff(k);
        for (std::size_t i = 1; i < k; ++i) rhs -= A[i] * B[k - i];
        A[k] = least_abs_residue(rhs * v_inv, mu);
        B[k] = divide_exact(rhs - v * A[k], u);
    }
    return {std::move(A), std::move(B)};
}

std::pair<TruncatedSeries, TruncatedSeries> factor_n_gt_2m(const NormalForm& nf, std::size_t order) {
    if (!nf.n_exceeds_2m()) throw NotApplicable("n <= 2m: the linear-term construction does not apply");
    if (nf.degree() < 2) throw NotApplicable("factor_n_gt_2m needs degree >= 2");

    const Prime& p = nf.p;
    const unsigned long m = *nf.m;
    const Integer pm = p.power(m);
    const Integer q = p.power(nf.n - 2 * m);
    const Integer& g1 = nf.g(1);
    auto gamma = [&](std::size_t k) { return k <= nf.degree() ? nf.g(k) : Integer(0); };

    // a_1 is a root of h(x) = g2 - g1 x + q x^2 mod p^m; mod p it is g2 / g1.
    const IntPoly h(std::vector<Integer>{gamma(2), -g1, q});
    const Integer start = mod(gamma(2) * inverse_mod(g1, p.value()), p.value());
    const Integer a1 = least_abs_residue(hensel_lift(h, start, p, m), pm);

    const std::size_t top = std::max<std::size_t>(order, 2);
    std::vector<Integer> a(top + 1), b(top + 1), s(top + 1);
    a[0] = pm;
    b[0] = p.power(nf.n - m);
    a[1] = a1;
    b[1] = g1 - q * a1;
    s[1] = g1;
    s[2] = divide_exact(eval(h, a1), pm);

    // gamma_k = p^m s_k + a_{k-1} c + a_1 s_{k-1} + sum_{i=2}^{k-2} a_i b_{k-i},  c = g1 - 2 q a_1.
    const Integer c = g1 - 2 * q * a1;
    const Integer c_inv = inverse_mod(c, pm);
    for (std::size_t k = 3; k <= top; ++k) {
        Integer rest = gamma(k) - a1 * s[k - 1];
        for (std::size_t i = 2; i + 2 <= k; ++i) rest -= a[i] * b[k - i];
        a[k - 1] = least_abs_residue(rest * c_inv, pm);
        s[k] = divide_exact(rest - a[k - 1] * c, pm);
        b[k - 1] = s[k - 1] - q * a[k - 1];
    }
    return {TruncatedSeries(std::move(a), order), TruncatedSeries(std::move(b), order)};
}

std::pair<IntPoly, IntPoly> factor_multiple_root(const IntPoly& f) {
    const IntPoly G = gcd_Z(f, derivative(f));
    if (G.degree() < 1) throw NotApplicable("f is squarefree");
    const IntPoly reduced = divide_exact(f, G);
    if (is_unit(G)) throw NotApplicable("gcd(f, f') has a unit constant term");
    if (is_unit(reduced)) throw NotApplicable("f / gcd(f, f') has a unit constant term");
    return {G, reduced};
}

std::pair<TruncatedSeries, TruncatedSeries> normalize_factorization(const TruncatedSeries& a_in,
                                                                    const TruncatedSeries& b_in,
                                                                    std::size_t k) {
    TruncatedSeries A = a_in, B = b_in;
    if (A[0] < 0) {
        for (auto* s : {&A, &B})
            for (std::size_t i = 0; i < s->order(); ++i) (*s)[i] = -(*s)[i];
    }
    const auto pp = as_prime_power(A[0]);
    if (!pp) throw DomainError("A(0) must be a prime power p^ell with ell >= 1");
    const Prime p(pp->prime);
    const unsigned long ell = pp->exponent;
    if (B[0] == 0) throw DomainError("B(0) must be a power of p");
    const unsigned long rest = vp(B[0], p);
    if (abs(B[0]) != p.power(rest)) throw DomainError("B(0) must be a power of p");
    const unsigned long n = ell + rest;

    const std::size_t order = std::min(A.order(), B.order());
    if (order >= 2 && divides(p.value(), A[1])) {
        if (2 * ell == n && !divides(p.value(), B[1])) {
            std::swap(A, B);
            if (A[0] < 0) {
                for (auto* s : {&A, &B})
                    for (std::size_t i = 0; i < s->order(); ++i) (*s)[i] = -(*s)[i];
            }
        } else {
            throw NotNormalizable("p divides a_1 and the factors cannot be exchanged");
        }
    }
    A = A.truncated(order);
    B = B.truncated(order);

    const Integer pl = p.power(ell);
    // Stage j clears a_{j+1}, given a_2 = ... = a_j = 0.
    for (std::size_t j = 1; j < k && j + 1 < order; ++j) {
        if (A[j + 1] == 0) continue;
        const Integer& a1 = A[1];
        const Integer modulus = p.power(j * ell);
        const Integer c = ((j - 1) % 2 == 0 ? 1 : -1) * pow(a1, j);
        const Integer rhs = -A[j + 1] * p.power((j - 1) * ell);

        std::vector<Integer> u(j + 2);
        u[0] = 1;
        u[1] = least_abs_residue(rhs * inverse_mod(c, modulus), modulus);
        u[j + 1] = divide_exact(rhs - c * u[1], modulus);
        for (std::size_t i = 2; i <= j; ++i) u[i] = divide_exact(-u[i - 1] * a1, pl);

        const TruncatedSeries U(std::move(u), order);
        A = mul(U, A);
        B = mul(invert_unit(U), B);
        for (std::size_t i = 2; i <= j + 1; ++i) ZXF_ENSURE(A[i] == 0, "normalization left a nonzero coefficient");
    }
    return {std::move(A), std::move(B)};
}

RecoveredRoot recover_root_from_factorization(const FactorizationCertificate& cert, unsigned long K) {
    if (K == 0) throw DomainError("depth must be >= 1");
    if (cert.input.degree() < 2) throw NotApplicable("root recovery needs degree >= 2");
    auto form = normal_form(cert.input);
    if (!std::holds_alternative<NormalForm>(form)) throw NotApplicable(std::get<NormalFormNotApplicable>(form).message);
    const NormalForm& nf = std::get<NormalForm>(form);
    if (nf.n_exceeds_2m()) throw NotApplicable("root recovery needs n <= 2m");
    const Integer g3 = nf.degree() >= 3 ? nf.g(3) : Integer(0);
    if (divides(nf.p.value(), nf.g(2)) && divides(nf.p.value(), g3)) throw NotApplicable("p divides g2 and g3");

    const unsigned long d = nf.degree();
    const std::size_t k = std::max<unsigned long>(K, d);
    if (cert.order < k + 2) throw DomainError("certificate order too small for the requested depth");

    const auto [A, B] = normalize_factorization(cert.a.truncated(cert.order), cert.b.truncated(cert.order), k);
    const Prime& p = nf.p;
    const unsigned long ell = vp(A[0], p);
    const Integer& a1 = A[1];
    const GkTower tower = gk_tower(nf, ell);
    ZXF_ENSURE(eval_mod(tower.g(d), a1, p.power(k * ell)) == 0, "g_d(a_1) != 0 mod p^(k ell)");

    const Integer modulus = p.power(K * ell);
    const Integer residue = mod(-p.power(ell) * inverse_mod(a1, modulus), modulus);
    return RecoveredRoot{p, residue, static_cast<unsigned long>(K * ell), ell};
}

std::optional<std::pair<IntPoly, IntPoly>> closed_form_double_root(const NormalForm& nf) {
    const IntPoly& f = nf.poly;
    const long d = f.degree();
    if (d != 2 && d != 3) return std::nullopt;
    if (discriminant(f) != 0) return std::nullopt;
    const Integer &f0 = f.coefficients()[0], &f1 = f.coefficients()[1], &f2 = f.coefficients()[2];

    if (d == 2) {
        if (mpz_perfect_square_p(f0.get_mpz_t()) == 0) return std::nullopt;
        const Integer c = sqrt(f0);
        if (!divides(2 * c, f1)) return std::nullopt;
        const Integer e = f1 / (2 * c);
        if (e * e != f2) return std::nullopt;
        const IntPoly root_factor(std::vector<Integer>{c, e});
        return std::pair{root_factor, root_factor};
    }

    if (nf.n_exceeds_2m()) return std::nullopt;
    const Integer& f3 = f.coefficients()[3];
    const Integer den = 2 * (3 * f1 * f3 - f2 * f2);
    if (den == 0) return std::nullopt;
    mpq_class rho(f1 * f2 - 9 * f0 * f3, den);
    rho.canonicalize();
    if (rho == 0) return std::nullopt;

    // rho = -p^ell / a in lowest terms.
    const Integer b = abs(rho.get_num());
    const Integer a = -rho.get_den() * sgn(rho.get_num());
    const Prime& p = nf.p;
    const unsigned long ell = vp(b, p);
    if (ell == 0 || b != p.power(ell) || 2 * ell > nf.n) return std::nullopt;
    if (!divides(b, f1) || !divides(a, f3)) return std::nullopt;

    const IntPoly first(std::vector<Integer>{b, a});
    const IntPoly second(std::vector<Integer>{p.power(nf.n - ell), f1 / b - p.power(nf.n - 2 * ell) * a, f3 / a});
    if (first * second != f) return std::nullopt;
    return std::pair{first, second};
}

namespace {

FactorizationCertificate make_certificate(const IntPoly& f, TruncatedSeries a, TruncatedSeries b,
                                          std::size_t order, Rule rule) {
    FactorizationCertificate cert;
    cert.input = f;
    cert.a = std::move(a);
    cert.b = std::move(b);
    cert.order = order;
    cert.rule = rule;
    return cert;
}

bool same_up_to_sign(const IntPoly& x, const IntPoly& y) { return x == y || x == -y; }

// f has positive constant term and was classified Reducible.
FactorizationCertificate build(const IntPoly& f, const Classification& c, std::size_t N) {
    switch (c.rule) {
        case Rule::PowerOfXContent: {
            auto [rest, t] = strip_power_of_x(f);
            auto cert = make_certificate(f, TruncatedSeries::from_poly(IntPoly{0, 1}, N),
                                         TruncatedSeries::from_poly(IntPoly::monomial(1, t - 1) * rest, N), N,
                                         c.rule);
            cert.witnesses.emplace_back("x_power", std::to_string(t));
            return cert;
        }
        case Rule::IntegerContent: {
            const Integer& cont = *c.content;
            const IntPoly rest = divide_exact(f, IntPoly::constant(cont));
            // When f / content is a unit the content itself is composite; split one prime off.
            const Integer split = is_unit(rest) ? smallest_prime_factor(cont) : cont;
            auto cert = make_certificate(f, TruncatedSeries::from_poly(IntPoly::constant(split), N),
                                         TruncatedSeries::from_poly(divide_exact(f, IntPoly::constant(split)), N),
                                         N, c.rule);
            cert.witnesses.emplace_back("content", to_string(cont));
            return cert;
        }
        case Rule::NotPrimePower: {
            const Integer f0 = f.constant_term();
            const auto factors = factor_integer(f0);
            const Integer u = pow(factors.front().first, factors.front().second);
            const Integer v = f0 / u;
            auto [A, B] = factor_coprime_constant(f, u, v, N);
            auto cert = make_certificate(f, std::move(A), std::move(B), N, c.rule);
            cert.witnesses.emplace_back("u", to_string(u));
            cert.witnesses.emplace_back("v", to_string(v));
            return cert;
        }
        case Rule::LinearRule: {
            const Integer& p = *c.p;
            auto cert = make_certificate(f, TruncatedSeries::from_poly(IntPoly::constant(p), N),
                                         TruncatedSeries::from_poly(divide_exact(f, IntPoly::constant(p)), N), N,
                                         c.rule);
            cert.witnesses.emplace_back("p", to_string(p));
            return cert;
        }
        case Rule::NGreaterThan2M: {
            const NormalForm& nf = *c.normal_form;
            auto [A, B] = factor_n_gt_2m(nf, N);
            auto cert = make_certificate(f, std::move(A), std::move(B), N, c.rule);
            cert.witnesses.emplace_back("p", to_string(nf.p.value()));
            cert.witnesses.emplace_back("n", std::to_string(nf.n));
            cert.witnesses.emplace_back("m", std::to_string(*nf.m));
            cert.witnesses.emplace_back("a1", to_string(cert.a.order() > 1 ? cert.a[1] : Integer(0)));
            return cert;
        }
        case Rule::MultipleRootGcd: {
            auto [G, reduced] = factor_multiple_root(f);
            std::string closed = "not_applicable";
            if (c.normal_form && f.degree() <= 3) {
                if (auto cf = closed_form_double_root(*c.normal_form)) {
                    const bool agrees = (same_up_to_sign(cf->first, G) && same_up_to_sign(cf->second, reduced)) ||
                                        (same_up_to_sign(cf->first, reduced) && same_up_to_sign(cf->second, G));
                    ZXF_ENSURE(agrees, "closed-form double-root factors disagree with the gcd split");
                    closed = "agrees";
                }
            }
            auto cert = make_certificate(f, TruncatedSeries::from_poly(G, N), TruncatedSeries::from_poly(reduced, N),
                                         N, c.rule);
            cert.witnesses.emplace_back("gcd_degree", std::to_string(G.degree()));
            cert.witnesses.emplace_back("closed_form", closed);
            return cert;
        }
        case Rule::SimplePAdicRoot:
            return factor_simple_root(*c.normal_form, *c.root, N);
        default:
            break;
    }
    throw ContractViolation("no construction for rule " + std::string(to_string(c.rule)));
}

}  // namespace

FactorOutcome factor(const IntPoly& f, std::size_t order) {
    if (order == 0) throw DomainError("order must be >= 1");
    FactorOutcome out{classify(f), std::nullopt};
    if (out.classification.verdict != Verdict::Reducible) return out;

    const bool negate = f.constant_term() < 0;
    FactorizationCertificate cert = build(negate ? -f : f, out.classification, order);
    if (negate) {
        cert.input = f;
        for (std::size_t i = 0; i < cert.b.order(); ++i) cert.b[i] = -cert.b[i];
    }
    ZXF_ENSURE(verify_certificate(cert), "certificate failed verification");
    out.certificate = std::move(cert);
    return out;
}

}  // namespace zxf
