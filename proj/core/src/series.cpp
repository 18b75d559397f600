#include "zxf/series.hpp"

#include <algorithm>
#include <utility>

#include "zxf/errors.hpp"

namespace zxf {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw DomainError("series order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
    if (order == 0) throw DomainError("series order must be >= 1");
    coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::from_poly(const IntPoly& f, std::size_t order) {
    return TruncatedSeries(f.coefficients(), order);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    return TruncatedSeries(coeffs_, order);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries& u) {
    if (!is_unit(u)) throw DomainError("not a unit in Z[[x]]");
    const std::size_t n = u.order();
    const Integer& u0 = u[0];  // u0 = u0^-1
    TruncatedSeries v(n);
    v[0] = u0;
    for (std::size_t k = 1; k < n; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= k; ++i) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), v[k - i].get_mpz_t());
        v[k] = -u0 * acc;
    }
    return v;
}

bool equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    if (a.order() < n || b.order() < n) throw DomainError("series known to lower order than compared");
    return std::equal(a.coefficients().begin(), a.coefficients().begin() + static_cast<std::ptrdiff_t>(n),
                      b.coefficients().begin());
}

bool is_unit(const TruncatedSeries& f) { return zxf::is_unit(f[0]); }
bool is_unit(const IntPoly& f) { return zxf::is_unit(f.constant_term()); }

}  // namespace zxf
