#include "discroot/named_series.hpp"

namespace discroot {

BigInt central_trinomial_coeff(unsigned long n) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), 3 * n, n);
    return r;
}

BigInt fuss_catalan(long n, long r, unsigned long m) {
    const BigInt top = BigInt(n) * static_cast<long>(m) + r;
    if (top == 0) throw domain_error("fuss_catalan: mn + r = 0");
    const BigInt num = r * binomial(top, m);
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), top.get_mpz_t());
    if (rem != 0) throw integrality_error("fuss_catalan: r/(mn+r)*C(mn+r,m) is not an integer");
    return q;
}

BigInt raney_number(long n, long r, unsigned long m) {
    // r/(mn+r) * C(mn+r, m) rewritten as r * (mn+r-1)(mn+r-2)...(mn+r-m+1) / m!
    // for m >= 1, which stays defined at mn + r = 0 (the coefficient of
    // B_n^r there).  A_0 is always 1.
    if (m == 0) return 1;
    BigInt num(r);
    const BigInt top = BigInt(n) * static_cast<long>(m) + r;
    for (unsigned long j = 1; j < m; ++j) num *= top - static_cast<long>(j);
    BigInt q, rem;
    const BigInt mfac = factorial(m);
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), mfac.get_mpz_t());
    if (rem != 0) throw integrality_error("raney_number: non-integral coefficient");
    return q;
}

Rational hypergeometric_coefficient(const Rational& a, const Rational& b,
                                    const Rational& c, unsigned long n) {
    if (c <= 0 && c.get_den() == 1)
        throw domain_error("hypergeometric: c must not be a non-positive integer");
    // (a)_n (b)_n / ((c)_n n!) built up term by term.
    Rational coeff = 1;
    for (unsigned long k = 0; k < n; ++k) {
        Rational kk(static_cast<long>(k));
        coeff *= (a + kk) * (b + kk) / ((c + kk) * Rational(static_cast<long>(k) + 1));
    }
    return coeff;
}

} // namespace discroot
