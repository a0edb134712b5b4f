#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "discroot/errors.hpp"

namespace discroot {

// Exact arithmetic is GMP-backed throughout: BigInt is the ring Z and
// Rational the field Q.  mpq_class is kept canonical (den > 0, reduced),
// which is exactly the representation invariant we need.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// binomial(top, m) for arbitrary integer top: top(top-1)...(top-m+1)/m!.
inline BigInt binomial(const BigInt& top, unsigned long m) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), m);
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw domain_error("0 raised to a negative power");
        return pow(Rational(1) / base, -e);
    }
    Rational r = 1;
    Rational b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// --- ring trait hooks used by TruncatedSeries and friends -------------
//
// Every coefficient ring provides these as free functions found by
// unqualified lookup: same_ring, zero_like, one_like, from_integer_like,
// is_zero, invert, characteristic.  The "like" argument carries runtime
// ring data (a prime modulus, a variable set); Z and Q have none.

inline bool same_ring(const BigInt&, const BigInt&) { return true; }
inline bool same_ring(const Rational&, const Rational&) { return true; }

inline BigInt zero_like(const BigInt&) { return BigInt(0); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline BigInt from_integer_like(const BigInt&, const BigInt& n) { return n; }
inline Rational from_integer_like(const Rational&, const BigInt& n) {
    return Rational(n);
}

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

inline BigInt invert(const BigInt& x) {
    if (x == 1 || x == -1) return x;
    throw domain_error("non-unit constant term in Z");
}
inline Rational invert(const Rational& x) {
    if (x == 0) throw domain_error("division by zero in Q");
    return Rational(1) / x;
}

inline unsigned characteristic(const BigInt&) { return 0; }
inline unsigned characteristic(const Rational&) { return 0; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace discroot
