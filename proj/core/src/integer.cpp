#include "zxf/integer.hpp"

#include <algorithm>
#include <map>

#include "zxf/errors.hpp"

namespace zxf {

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    if (sgn(m) <= 0) throw DomainError("modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer least_abs_residue(const Integer& a, const Integer& m) {
    Integer r = mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    if (m == 1) return 0;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw DomainError(to_string(a) + " is not invertible mod " + to_string(m));
    }
    return mod(r, m);
}

Integer divide_exact(const Integer& a, const Integer& b) {
    ZXF_ENSURE(b != 0, "division by zero");
    ZXF_ENSURE(divides(b, a), "inexact division " + to_string(a) + " / " + to_string(b));
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool divides(const Integer& d, const Integer& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

std::optional<PrimePower> as_prime_power(const Integer& n) {
    if (n < 2) return std::nullopt;
    if (is_prime(n)) return PrimePower{n, 1};
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && is_prime(root)) {
            return PrimePower{root, k};
        }
    }
    return std::nullopt;
}

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Brent's variant of Pollard rho; n odd composite, not a perfect power of a small prime.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto step = [&](const Integer& v) { return mod(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = mod(q * abs(Integer(x - y)), n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (auto pp = as_prime_power(n)) {
        out[pp->prime] += pp->exponent;
        return;
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer rest = abs(n);
    std::map<Integer, unsigned long> found;
    for (unsigned long p = 2; p < 10000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++found[Integer(p)];
            rest /= p;
        }
    }
    factor_into(rest, found);
    return {found.begin(), found.end()};
}

Integer smallest_prime_factor(const Integer& n) {
    const auto factors = factor_integer(n);
    if (factors.empty()) throw DomainError("units have no prime factors");
    return factors.front().first;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("not a decimal integer: '" + text + "'");
    }
    Integer r(text.substr(text[0] == '+' ? 1 : 0), 10);
    return r;
}

}  // namespace zxf
