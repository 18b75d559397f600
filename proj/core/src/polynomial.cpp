#include "zxf/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "zxf/errors.hpp"

namespace zxf {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

Integer eval(const IntPoly& f, const Integer& x) {
    Integer acc = 0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m) {
    Integer acc = 0;
    const Integer xr = mod(x, m);
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * xr + *it, m);
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Integer> d(f.coefficients().size() - 1);
    for (std::size_t i = 1; i < f.coefficients().size(); ++i) d[i - 1] = f.coefficients()[i] * i;
    return IntPoly(std::move(d));
}

Integer content(const IntPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly with_positive_leading(IntPoly f) {
    if (f.leading() < 0) return -f;
    return f;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return {};
    const Integer c = content(f);
    std::vector<Integer> v = f.coefficients();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return with_positive_leading(IntPoly(std::move(v)));
}

std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Integer> rem = f.coefficients();
    const auto dg = static_cast<std::size_t>(g.degree());
    const Integer& lc = g.coefficients().back();
    std::vector<Integer> quot(rem.size() - dg);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + dg];
        if (top == 0) continue;
        if (!divides(lc, top)) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t i = 0; i <= dg; ++i) rem[k + i] -= q * g.coefficients()[i];
        quot[k] = std::move(q);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
        return std::nullopt;
    }
    return IntPoly(std::move(quot));
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
    auto q = try_divide(f, g);
    ZXF_ENSURE(q.has_value(), "polynomial division is not exact");
    return *std::move(q);
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DomainError("pseudo-remainder by zero");
    if (f.degree() < g.degree()) return f;
    std::vector<Integer> r = f.coefficients();
    const auto dg = static_cast<std::size_t>(g.degree());
    const Integer& lc = g.coefficients().back();
    for (std::size_t top = r.size(); top-- > dg;) {
        const Integer t = r[top];
        for (auto& c : r) c *= lc;
        for (std::size_t i = 0; i <= dg; ++i) r[top - dg + i] -= t * g.coefficients()[i];
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

IntPoly gcd_Z(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    Integer c;
    const Integer cf = content(f), cg = content(g);
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());

    IntPoly a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a) * c;
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    if (size == 0) return 1;

    // Sylvester matrix, rows of f then rows of g, coefficients leading first.
    std::vector<std::vector<Integer>> M(size, std::vector<Integer>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = f.coefficients()[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = g.coefficients()[n - j];

    // Bareiss fraction-free elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (M[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < size && M[piv][k] == 0) ++piv;
            if (piv == size) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Integer v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[size - 1][size - 1];
}

Integer discriminant_by_resultant(const IntPoly& f) {
    if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    const long d = f.degree();
    Integer r = zxf::divide_exact(resultant(f, derivative(f)), f.leading());
    return ((d * (d - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

Integer discriminant(const IntPoly& f) {
    switch (f.degree()) {
        case 2: {
            const Integer &c = f.coefficients()[0], &b = f.coefficients()[1], &a = f.coefficients()[2];
            return b * b - 4 * a * c;
        }
        case 3: {
            const Integer &d = f.coefficients()[0], &c = f.coefficients()[1], &b = f.coefficients()[2],
                          &a = f.coefficients()[3];
            return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                   27 * a * a * d * d;
        }
        default:
            return discriminant_by_resultant(f);
    }
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (f.degree() == 0) return IntPoly::constant(1);
    return with_positive_leading(divide_exact(f, gcd_Z(f, derivative(f))));
}

std::pair<IntPoly, std::size_t> strip_power_of_x(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial has no finite x-adic order");
    const auto& c = f.coefficients();
    std::size_t t = 0;
    while (c[t] == 0) ++t;
    return {IntPoly(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(t), c.end())), t};
}

}  // namespace zxf
