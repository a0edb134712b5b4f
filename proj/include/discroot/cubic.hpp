#pragma once

#include "discroot/bigint.hpp"
#include "discroot/errors.hpp"

namespace discroot {

/// t^3 + c1 t^2 + c2 t + c3 over any coefficient ring R.
template <class R>
struct GeneralCubic {
    R c1, c2, c3;

    R eval(const R& t) const { return ((t + c1) * t + c2) * t + c3; }
    R eval_derivative(const R& t) const {
        const R three = from_integer_like(c1, BigInt(3));
        const R two = from_integer_like(c1, BigInt(2));
        return three * t * t + two * c1 * t + c2;
    }
};

/// t^3 + p t + q.
template <class R>
struct DepressedCubic {
    R p, q;

    R eval(const R& t) const { return (t * t + p) * t + q; }
    GeneralCubic<R> general() const { return {zero_like(p), p, q}; }
};

/// t^4 + c t^2 + d t + e.
template <class R>
struct DepressedQuartic {
    R c, d, e;

    R eval(const R& t) const { return ((t * t + c) * t + d) * t + e; }
};

/// Discriminant of the general cubic; one formula for every
/// characteristic (the integer constants reduce in the ring, so over a
/// characteristic-3 field this is c1^2 c2^2 - c1^3 c3 - c2^3).
template <class R>
R cubic_discriminant(const GeneralCubic<R>& f) {
    auto k = [&](long n) { return from_integer_like(f.c1, BigInt(n)); };
    const R c1 = f.c1, c2 = f.c2, c3 = f.c3;
    return c1 * c1 * c2 * c2 + k(-4) * c2 * c2 * c2 + k(-4) * c1 * c1 * c1 * c3 +
           k(18) * c1 * c2 * c3 + k(-27) * c3 * c3;
}

template <class R>
R cubic_discriminant(const DepressedCubic<R>& g) {
    auto k = [&](long n) { return from_integer_like(g.p, BigInt(n)); };
    return k(-4) * g.p * g.p * g.p + k(-27) * g.q * g.q;
}

/// Discriminant of the depressed quartic t^4 + c t^2 + d t + e.
template <class R>
R quartic_discriminant(const DepressedQuartic<R>& g) {
    auto k = [&](long n) { return from_integer_like(g.c, BigInt(n)); };
    const R c = g.c, d = g.d, e = g.e;
    const R c2 = c * c, d2 = d * d, e2 = e * e;
    return k(16) * c2 * c2 * e + k(-4) * c2 * c * d2 + k(-128) * c2 * e2 +
           k(144) * c * d2 * e + k(-27) * d2 * d2 + k(256) * e2 * e;
}

/// delta with delta^2 = Delta in characteristic 2: c1 c2 + c3.
template <class R>
R char2_delta(const GeneralCubic<R>& f) {
    if (characteristic(f.c1) != 2)
        throw domain_error("char2_delta requires a characteristic-2 ring");
    return f.c1 * f.c2 + f.c3;
}

template <class R>
struct DepressedForm {
    DepressedCubic<R> g;
    R shift; // g(t) = f(t + shift), shift = -c1/3
};

/// Remove the quadratic term by t -> t - c1/3 (impossible in
/// characteristic 3, where no substitution kills the t^2 term).
template <class R>
DepressedForm<R> depress_cubic(const GeneralCubic<R>& f) {
    if (characteristic(f.c1) == 3)
        throw domain_error("cannot depress a cubic in characteristic 3");
    const R three = from_integer_like(f.c1, BigInt(3));
    const R third = invert(three);
    const R c1_over_3 = f.c1 * third;
    // p = c2 - c1^2/3, q = 2 c1^3/27 - c1 c2 / 3 + c3
    const R p = f.c2 - f.c1 * c1_over_3;
    const R q = from_integer_like(f.c1, BigInt(2)) * c1_over_3 * c1_over_3 * c1_over_3 -
                c1_over_3 * f.c2 + f.c3;
    return {{p, q}, zero_like(f.c1) - c1_over_3};
}

} // namespace discroot
