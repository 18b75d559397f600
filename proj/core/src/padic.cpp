#include "zxf/padic.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace zxf {

Prime::Prime(Integer value) : value_(std::move(value)) {
    if (!is_prime(value_)) throw DomainError(to_string(value_) + " is not prime");
}

unsigned long vp(const Integer& n, const Prime& p) {
    if (n == 0) throw DomainError("valuation of zero is infinite");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t());
}

std::optional<unsigned long> vp_or_infinite(const Integer& n, const Prime& p) {
    if (n == 0) return std::nullopt;
    return vp(n, p);
}

namespace {

std::string describe(std::optional<unsigned long> v) {
    return v ? std::to_string(*v) : std::string("infinite");
}

}  // namespace

HenselError::HenselError(std::optional<unsigned long> theta_, std::optional<unsigned long> value_valuation_)
    : DomainError("Hensel condition fails: theta = " + describe(theta_) +
                  ", vp(f(r0)) = " + describe(value_valuation_)),
      theta(theta_),
      value_valuation(value_valuation_) {}

Integer hensel_lift(const IntPoly& f, const Integer& r0, const Prime& p, unsigned long K) {
    if (K == 0) throw DomainError("target precision must be >= 1");
    const IntPoly df = derivative(f);
    const auto theta = vp_or_infinite(eval(df, r0), p);
    const auto fv = vp_or_infinite(eval(f, r0), p);
    if (!theta || (fv && *fv < 2 * *theta + 1)) throw HenselError(theta, fv);

    // Iterate Newton until vp(f(r)) >= K + theta, which pins r to the root mod p^K.
    const Integer work = p.power(K + *theta);
    const Integer ptheta = p.power(*theta);
    Integer r = mod(r0, work);
    for (;;) {
        const Integer value = eval(f, r);
        if (value == 0 || vp(value, p) >= K + *theta) break;
        const Integer unit = divide_exact(eval(df, r), ptheta);
        const Integer step = mod(divide_exact(value, ptheta) * inverse_mod(unit, work), work);
        r = mod(r - step, work);
    }
    return mod(r, p.power(K));
}

unsigned long decision_depth(const IntPoly& squarefree, const Prime& p) {
    ZXF_ENSURE(squarefree.degree() >= 1, "decision depth needs a nonconstant polynomial");
    const Integer res = resultant(squarefree, derivative(squarefree));
    ZXF_ENSURE(res != 0, "polynomial passed as squarefree has a repeated factor");
    return 2 * vp(res, p) + 1;
}

namespace {

// Dense polynomials over F_p, lowest degree first, always trimmed.
using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const IntPoly& f, const Integer& p) {
    ModPoly a;
    for (const auto& c : f.coefficients()) a.push_back(mod(c, p));
    trim(a);
    return a;
}

ModPoly rem(ModPoly a, const ModPoly& b, const Integer& p) {
    const Integer inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const Integer q = mod(a.back() * inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - q * b[i], p);
        trim(a);
    }
    return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = mod(c, p);
    trim(r);
    return rem(std::move(r), m, p);
}

ModPoly powmod(ModPoly base, Integer e, const ModPoly& m, const Integer& p) {
    ModPoly result{1};
    result = rem(result, m, p);
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

ModPoly gcd(ModPoly a, ModPoly b, const Integer& p) {
    while (!b.empty()) {
        ModPoly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Integer inv = inverse_mod(a.back(), p);
        for (auto& c : a) c = mod(c * inv, p);
    }
    return a;
}

// g is monic and a product of distinct linear factors over F_p, p odd.
void split_linear(const ModPoly& g, const Integer& p, std::vector<Integer>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(mod(-g[0], p));
        return;
    }
    const Integer half = (p - 1) / 2;
    for (Integer a = 1;; ++a) {
        ModPoly w = powmod(ModPoly{a, 1}, half, g, p);
        if (w.empty()) w = {Integer(0)};
        w[0] = mod(w[0] - 1, p);
        trim(w);
        ModPoly d = gcd(g, w, p);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear(d, p, out);
            ModPoly quotient;
            // g / d by long division; exact.
            ModPoly r = g;
            quotient.assign(g.size() - d.size() + 1, Integer(0));
            while (r.size() >= d.size()) {
                const std::size_t shift = r.size() - d.size();
                const Integer q = r.back();
                quotient[shift] = q;
                for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = mod(r[shift + i] - q * d[i], p);
                trim(r);
            }
            split_linear(quotient, p, out);
            return;
        }
    }
}

// Residues r in [0, p) with q(r) = 0 mod p; q is primitive so it never vanishes mod p.
std::vector<Integer> roots_mod_p(const IntPoly& q, const Prime& prime) {
    const Integer& p = prime.value();
    std::vector<Integer> roots;
    if (p < 1000) {
        for (Integer r = 0; r < p; ++r)
            if (eval_mod(q, r, p) == 0) roots.push_back(r);
        return roots;
    }
    ModPoly a = reduce(q, p);
    if (a.size() <= 1) return roots;
    const Integer inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = mod(c * inv, p);
    ModPoly xp = powmod(ModPoly{0, 1}, p, a, p);
    xp.resize(std::max<std::size_t>(xp.size(), 2));
    xp[1] = mod(xp[1] - 1, p);
    trim(xp);
    split_linear(gcd(a, xp, p), p, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Branch-and-lift over residues mod p, p^2, ... for a squarefree q; returns each
// distinct root of q in Z_p to precision `work` (>= decision depth).
std::vector<Integer> lifted_roots(const IntPoly& q, const Prime& p, unsigned long work) {
    if (q.degree() < 1) return {};
    const unsigned long depth = decision_depth(q, p);
    work = std::max(work, depth);
    const IntPoly dq = derivative(q);

    std::vector<Integer> accepted;
    std::vector<Integer> level = roots_mod_p(q, p);
    for (unsigned long k = 1; !level.empty(); ++k) {
        ZXF_ENSURE(k <= depth, "branch survived past the decision depth");
        const Integer pk = p.power(k);
        const Integer pk1 = pk * p.value();
        std::vector<Integer> next;
        for (const auto& r : level) {
            const auto theta = vp_or_infinite(eval(dq, r), p);
            if (theta && *theta < k && k >= 2 * *theta + 1) {
                accepted.push_back(r);
                continue;
            }
            // Here p | q'(r), so q(r + i p^k) = q(r) mod p^(k+1) for every digit i.
            if (eval_mod(q, r, pk1) != 0) continue;
            for (Integer i = 0; i < p.value(); ++i) next.push_back(r + i * pk);
        }
        level = std::move(next);
    }

    std::set<Integer> distinct;
    for (const auto& r : accepted) distinct.insert(hensel_lift(q, r, p, work));
    return {distinct.begin(), distinct.end()};
}

}  // namespace

std::vector<PAdicRoot> roots_in_Zp(const IntPoly& f, const Prime& p, unsigned long K) {
    if (f.is_zero()) throw DomainError("the zero polynomial vanishes everywhere");
    if (K == 0) throw DomainError("precision must be >= 1");

    const IntPoly g = primitive_part(squarefree_part(f));
    if (g.degree() < 1) return {};
    // Roots of `repeated` are the multiple roots of f; g = repeated * once, coprime.
    const IntPoly repeated = primitive_part(gcd_Z(g, gcd_Z(f, derivative(f))));
    const IntPoly once = primitive_part(divide_exact(g, repeated));
    const IntPoly df = derivative(f);

    std::vector<PAdicRoot> out;
    for (const auto& alpha : lifted_roots(repeated, p, K)) {
        const Integer residue = mod(alpha, p.power(K));
        out.push_back(PAdicRoot{p, residue, K, vp_or_infinite(residue, p), false, std::nullopt});
    }
    for (const auto& alpha : lifted_roots(once, p, K)) {
        // Raise precision until vp(f'(root)) is determined.
        unsigned long work = std::max(K, decision_depth(once, p));
        Integer approx = alpha;
        std::optional<unsigned long> theta;
        for (;;) {
            approx = hensel_lift(once, approx, p, work);
            theta = vp_or_infinite(eval(df, approx), p);
            if (theta && *theta < work) break;
            work *= 2;
        }
        const unsigned long precision = std::max(K, 2 * *theta + 1);
        const Integer residue = precision <= work ? mod(approx, p.power(precision))
                                                  : hensel_lift(once, approx, p, precision);
        ZXF_ENSURE(eval_mod(f, residue, p.power(2 * *theta + 1)) == 0, "missing Hensel witness");
        out.push_back(PAdicRoot{p, residue, precision, vp_or_infinite(residue, p), true, theta});
    }

    std::sort(out.begin(), out.end(), [](const PAdicRoot& a, const PAdicRoot& b) {
        const auto va = a.valuation.value_or(a.precision), vb = b.valuation.value_or(b.precision);
        return va != vb ? va < vb : a.residue < b.residue;
    });
    return out;
}

}  // namespace zxf
