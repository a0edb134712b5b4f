#pragma once

#include <vector>

#include "discroot/bigint.hpp"
#include "discroot/truncated_series.hpp"

namespace discroot {

/// C(3n, n), the coefficients of the discriminant series s(z).
BigInt central_trinomial_coeff(unsigned long n);

struct FussCatalanParams {
    long n = 0;
    long r = 0;
    unsigned long m = 0;
};

/// Fuss-Catalan number A_m(n, r) = r/(mn+r) * C(mn+r, m), as an exact
/// integer.  Throws domain_error when mn + r = 0 and integrality_error
/// when the division is not exact (which flags an invalid (n, r) pair).
BigInt fuss_catalan(long n, long r, unsigned long m);
inline BigInt fuss_catalan(const FussCatalanParams& p) {
    return fuss_catalan(p.n, p.r, p.m);
}

/// Same value as fuss_catalan wherever that is defined, but computed as
/// r * (mn+r-1)...(mn+r-m+1) / m!, which is also the correct coefficient
/// of B_n(z)^r at the single excluded point mn + r = 0 (e.g. the z^1
/// coefficient of B_2(z)^{-2}).
BigInt raney_number(long n, long r, unsigned long m);

/// Coefficient of z^n in the Gauss hypergeometric series F(a, b; c; z),
/// i.e. (a)_n (b)_n / ((c)_n n!) with rising factorials, exact.
Rational hypergeometric_coefficient(const Rational& a, const Rational& b,
                                    const Rational& c, unsigned long n);

/// B_{n,r}(z) = sum_m A_m(n,r) z^m truncated at `order`, coefficients
/// mapped into the ring of `proto`.
template <class R>
TruncatedSeries<R> generalized_binomial_series(long n, long r, int order, const R& proto) {
    if (order < 0) throw domain_error("series order must be >= 0");
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m)
        c.push_back(from_integer_like(proto, raney_number(n, r, static_cast<unsigned long>(m))));
    return TruncatedSeries<R>(std::move(c));
}

/// s(z) = sum_n C(3n,n) z^n truncated at `order`.
template <class R>
TruncatedSeries<R> discriminant_coeff_series(int order, const R& proto) {
    if (order < 0) throw domain_error("series order must be >= 0");
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m)
        c.push_back(from_integer_like(proto, central_trinomial_coeff(static_cast<unsigned long>(m))));
    return TruncatedSeries<R>(std::move(c));
}

} // namespace discroot
