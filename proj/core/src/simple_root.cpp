#include <algorithm>
#include <string>

#include "zxf/errors.hpp"
#include "zxf/factorize.hpp"

namespace zxf {

GkTower gk_tower(const NormalForm& nf, unsigned long ell) {
    const unsigned long d = nf.degree();
    if (d < 2) throw DomainError("the g_k tower needs degree >= 2");
    if (ell == 0 || 2 * ell > nf.n || (nf.m && ell > *nf.m)) throw DomainError("need 1 <= ell <= m and 2 ell <= n");

    const Prime& p = nf.p;
    std::vector<Integer> top(d + 1);
    for (unsigned long i = 0; i + 2 <= d; ++i) {
        const Integer term = nf.g(d - i) * p.power((d - i - 2) * ell);
        top[i] = i % 2 == 0 ? term : Integer(-term);
    }
    const Integer s1 = nf.m ? Integer(nf.g(1) * p.power(*nf.m - ell)) : Integer(0);
    top[d - 1] = (d - 1) % 2 == 0 ? s1 : Integer(-s1);
    const Integer lead = p.power(nf.n - 2 * ell);
    top[d] = d % 2 == 0 ? lead : Integer(-lead);

    GkTower tower;
    tower.ell = ell;
    tower.degree = d;
    tower.polys.resize(d + 1);
    tower.polys[d] = IntPoly(std::move(top));
    for (unsigned long k = d - 1; k >= 2; --k) {
        const IntPoly numerator = IntPoly::constant(p.power((k - 1) * ell) * nf.g(k + 1)) - tower.polys[k + 1];
        ZXF_ENSURE(numerator.constant_term() == 0, "g_k recursion left a constant term");
        tower.polys[k] = divide_exact(numerator, IntPoly{0, 1});
    }
    return tower;
}

namespace {

Integer exact(const Integer& a, const Integer& b) { return divide_exact(a, b); }

int sign_power(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SimpleRootFactorization construct_simple_root_factorization(const NormalForm& nf, const PAdicRoot& root,
                                                            std::size_t order) {
    const unsigned long d = nf.degree();
    if (d < 2) throw NotApplicable("the simple-root construction needs degree >= 2");
    if (nf.n_exceeds_2m()) throw NotApplicable("n > 2m: use the linear-term construction");
    if (!(root.prime == nf.p)) throw NotApplicable("root lives over a different prime");
    if (!root.simple || !root.theta) throw NotApplicable("root is not simple");
    if (!root.valuation || *root.valuation == 0) throw NotApplicable("root must have known valuation >= 1");
    if (order == 0) throw DomainError("order must be >= 1");

    const Prime& p = nf.p;
    const IntPoly& f = nf.poly;
    const unsigned long ell = *root.valuation;
    const unsigned long theta_f = *root.theta;
    if (eval_mod(f, root.residue, p.power(2 * theta_f + 1)) != 0) throw NotApplicable("residue is not a root of f");
    if (vp_or_infinite(eval(derivative(f), root.residue), p) != theta_f) throw NotApplicable("theta does not match");
    if (theta_f < ell) throw NotApplicable("vp(f'(root)) below the root valuation");
    if (2 * ell > nf.n || (nf.m && ell > *nf.m)) throw NotApplicable("valuation out of range for the normal form");

    const unsigned long theta = theta_f - ell;
    const unsigned long E = (2 * d - 3) * ell + 2 * theta;
    const unsigned long L = E + ell + 4;

    // r = -p^ell / rho, a unit root of g_d.
    const Integer alpha = hensel_lift(f, root.residue, p, L);
    ZXF_ENSURE(vp(alpha, p) == ell, "lifted root changed valuation");
    const Integer unit = exact(alpha, p.power(ell));
    const Integer rmod = p.power(L - ell);
    const Integer r = mod(-inverse_mod(unit, rmod), rmod);

    const GkTower tower = gk_tower(nf, ell);
    const IntPoly& gd = tower.g(d);
    const Integer a1 = least_abs_residue(r, p.power(E));
    ZXF_ENSURE(eval_mod(gd, a1, p.power(E)) == 0, "g_d(a_1) != 0 mod p^E");
    ZXF_ENSURE(vp_or_infinite(eval(derivative(gd), a1), p) == theta, "vp(g_d'(a_1)) != theta");

    const Integer P = p.power(ell);
    const Integer q = p.power(nf.n - 2 * ell);
    const Integer pt = p.power(theta);
    const Integer modulus = p.power((d - 1) * ell + theta);

    // Produce indices up to max(order - 1, d) and truncate at the end.
    const std::size_t top = std::max<std::size_t>(order - 1, d);
    FactorizationState st;
    st.ell = ell;
    st.theta = theta;
    st.degree = d;
    st.a.assign(top + 2, Integer(0));
    st.b.assign(top + 2, Integer(0));
    st.s.assign(top + 3, Integer(0));
    st.t.assign(top + 2, Integer(0));
    st.R.assign(top + 2, Integer(0));
    auto& a = st.a;
    auto& b = st.b;
    auto& s = st.s;
    auto& t = st.t;

    auto check = [&](const Integer& modulus_, const Integer& value, const char* what) {
        ++st.checks;
        ZXF_ENSURE(divides(modulus_, value), std::string("divisibility invariant failed for ") + what);
    };

    std::vector<Integer> w(d + 1);
    for (unsigned long k = 2; k <= d; ++k) w[k] = eval(derivative(tower.g(k)), a1);
    const Integer wu = exact(w[d], pt);
    const Integer wu_inv = inverse_mod(wu, modulus);

    a[0] = P;
    b[0] = p.power(nf.n - ell);
    a[1] = a1;
    s[1] = nf.m ? Integer(nf.g(1) * p.power(*nf.m - ell)) : Integer(0);
    b[1] = s[1] - q * a1;
    for (unsigned long k = 2; k <= d; ++k) s[k] = exact(eval(tower.g(k), a1), p.power((k - 1) * ell));
    for (unsigned long k = 2; k < d; ++k) b[k] = s[k];

    // Base step.
    const Integer a1_pow = pow(a1, d - 1);
    a[d] = least_abs_residue(sign_power(d) * a1_pow * exact(s[d], pt) * wu_inv, modulus);
    t[d] = exact(a[d] * w[d] + sign_power(d - 1) * a1_pow * s[d], P);
    s[d + 1] = d == 2 ? t[d] : exact(a[d] * w[2] - a1 * s[d], P);
    b[d] = s[d] - q * a[d];
    const Integer inner_mod = p.power((d - 2) * ell);
    check(inner_mod * pt, a[d], "a_d");
    check(inner_mod * pt * pt, t[d], "t_d");
    check(pt, s[d + 1], "s_{d+1}");

    std::size_t j = 1;
    for (; d + j <= top; ++j) {
        const std::size_t k = d + j;
        Integer R = 0;
        for (std::size_t i = 0; i < j; ++i) R += a[d + i] * b[k - 1 - i];
        st.R[k - 1] = R;
        check(pt * pt, R, "R");

        const Integer rhs = a1 * t[k - 1] + inner_mod * R;
        a[k] = least_abs_residue(exact(rhs, pt) * wu_inv, modulus);
        t[k] = exact(a[k] * w[d] - rhs, P);

        if (d == 2) {
            s[k + 1] = t[k];
        } else if (j + 2 >= d) {
            Integer acc = t[j + 2];
            for (unsigned long i = 2; i < d; ++i) acc += p.power((d - 1 - i) * ell) * a[k + 2 - i] * w[i];
            s[k + 1] = exact(acc, inner_mod);
        } else {
            Integer acc = a[k] * w[2] - a1 * s[k];
            for (std::size_t i = d; i < k; ++i) acc -= a[i] * b[k + 1 - i];
            s[k + 1] = exact(acc, P);
        }
        b[k] = s[k] - q * a[k];

        check(inner_mod * pt, a[k], "a_{d+j}");
        check(inner_mod * pt * pt, t[k], "t_{d+j}");
        check(pt, s[k + 1], "s_{d+1+j}");
    }
    st.last_j = j - 1;

    FactorizationCertificate cert;
    cert.input = f;
    cert.a = TruncatedSeries(std::vector<Integer>(a.begin(), a.begin() + top + 1), order);
    cert.b = TruncatedSeries(std::vector<Integer>(b.begin(), b.begin() + top + 1), order);
    cert.order = order;
    cert.rule = Rule::SimplePAdicRoot;
    cert.witnesses = {{"p", to_string(p.value())},
                      {"root_residue", to_string(root.residue)},
                      {"root_precision", std::to_string(root.precision)},
                      {"ell", std::to_string(ell)},
                      {"theta", std::to_string(theta)},
                      {"a1", to_string(a1)}};
    return SimpleRootFactorization{std::move(cert), std::move(st), tower};
}

FactorizationCertificate factor_simple_root(const NormalForm& nf, const PAdicRoot& root, std::size_t order) {
    auto result = construct_simple_root_factorization(nf, root, order);
    ZXF_ENSURE(verify_certificate(result.certificate), "simple-root certificate failed verification");
    return std::move(result.certificate);
}

}  // namespace zxf
