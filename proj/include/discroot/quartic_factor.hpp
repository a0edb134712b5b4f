#pragma once

#include <utility>

#include "discroot/disc_adic.hpp"

namespace discroot {

/// The two cubic resolvents of the depressed quartic, which share its
/// discriminant:
///   R3(t) = t^3 + 2c t^2 + (c^2 - 4e) t - d^2
///   R4(t) = t^3 -  c t^2 -      4e t + (4ce - d^2)
template <class K>
struct ResolventPair {
    GeneralCubic<RationalFunction<K>> r3;
    GeneralCubic<RationalFunction<K>> r4;
    RationalFunction<K> shared_discriminant;
};

template <class K>
ResolventPair<K> resolvents(const DepressedQuartic<RationalFunction<K>>& g) {
    using F = RationalFunction<K>;
    auto k = [&](long n) { return from_integer_like(g.c, BigInt(n)); };
    const F c = g.c, d = g.d, e = g.e;
    ResolventPair<K> pair{
        {k(2) * c, c * c - k(4) * e, zero_like(c) - d * d},
        {zero_like(c) - c, k(-4) * e, k(4) * c * e - d * d},
        quartic_discriminant(g)};
    if (!(cubic_discriminant(pair.r3) == pair.shared_discriminant) ||
        !(cubic_discriminant(pair.r4) == pair.shared_discriminant))
        throw verification_error("resolvent discriminants do not match the quartic's");
    return pair;
}

/// Distinguished roots alpha3, alpha4 of the two resolvents as series in
/// pi = Delta(g) (characteristic != 2, 3).
template <class K>
std::pair<DiscAdicElement<K>, DiscAdicElement<K>> resolvent_roots(const ResolventPair<K>& pair,
                                                                  const LiftConfig& cfg) {
    const unsigned ch = characteristic(pair.r3.c1);
    if (ch == 2 || ch == 3) throw domain_error("resolvent roots need characteristic != 2, 3");
    DiscAdicElement<K> alpha3 = general_discriminant_root_series(pair.r3, cfg);
    DiscAdicElement<K> alpha4 = general_discriminant_root_series(pair.r4, cfg);
    // rebase alpha3 onto alpha4's pi pointer (equal polynomials)
    if (!(alpha3.pi() == alpha4.pi()))
        throw verification_error("resolvent roots landed over different pi");
    return {DiscAdicElement<K>(alpha4.pi_ptr(), alpha3.terms()), std::move(alpha4)};
}

template <class K>
struct RhoSeries {
    DiscAdicElement<K> rho; // rho^2 = alpha4^2 - 4e, sign fixed by the constant term
};

/// Solve rho^2 = alpha4^2 - 4e level by level.  The constant term is
/// (8ce - 2c^3 - 9d^2)/(2c^2 + 24e); each higher coefficient comes from
/// equating Delta^k coefficients, a linear equation with slope 2 rho_0.
template <class K>
RhoSeries<K> rho_series(const DiscAdicElement<K>& alpha4,
                        const DepressedQuartic<RationalFunction<K>>& g, const LiftConfig& cfg) {
    cfg.validate();
    using F = RationalFunction<K>;
    const int N = cfg.truncation_order;
    auto k = [&](long n) { return from_integer_like(g.c, BigInt(n)); };

    const F seed_den = k(2) * g.c * g.c + k(24) * g.e;
    if (is_zero(seed_den))
        throw refusal_error("singular seed: 2c^2 + 24e = 0");
    const F rho0 = (k(8) * g.c * g.e - k(2) * g.c.pow(3) - k(9) * g.d * g.d) / seed_den;
    if (is_zero(rho0))
        throw refusal_error("singular seed: rho_0 = 0, cannot divide in the recursion");

    // cross-check the seed against Lemma-style algebra: rho_0 = -(c + alpha4_0)/2
    {
        F expect = (zero_like(g.c) - (g.c + alpha4.coeff(0))) / k(2);
        if (!(expect == rho0))
            throw verification_error("rho constant term disagrees with -(c + alpha4_0)/2");
    }

    auto embed = [&](const F& x) {
        return DiscAdicElement<K>::constant(alpha4.pi_ptr(), x, N);
    };
    DiscAdicElement<K> target = alpha4 * alpha4 - embed(k(4) * g.e);

    std::vector<F> coeffs(static_cast<std::size_t>(N) + 1, zero_like(g.c));
    coeffs[0] = rho0;
    const F two_rho0 = k(2) * rho0;
    for (int step = 1; step <= N; ++step) {
        DiscAdicElement<K> rho_now(alpha4.pi_ptr(),
                                   TruncatedSeries<F>(std::vector<F>(coeffs)));
        DiscAdicElement<K> residual = target - rho_now * rho_now;
        for (int j = 0; j < step; ++j)
            if (!is_zero(residual.coeff(j)))
                throw verification_error("rho recursion residual did not vanish below its level");
        coeffs[static_cast<std::size_t>(step)] = residual.coeff(step) / two_rho0;
    }
    DiscAdicElement<K> rho(alpha4.pi_ptr(), TruncatedSeries<F>(std::move(coeffs)));
    if (!(rho * rho).congruent_to(target))
        throw verification_error("rho^2 does not match alpha4^2 - 4e at this order");
    return {std::move(rho)};
}

/// r(t) = t^2 - s t + const_term with s = d/rho and const_term =
/// (alpha4 + rho)/2, plus the cofactor u(t) = t^2 + s t + u0 from long
/// division of g by r.
template <class K>
struct RamifiedQuadratic {
    DiscAdicElement<K> s;
    DiscAdicElement<K> const_term;
    DiscAdicElement<K> u0; // u(t) = t^2 + s t + u0
    int order = 0;

    DiscAdicElement<K> r_discriminant() const {
        auto four = from_integer_like(s, BigInt(4));
        return s * s - four * const_term;
    }
    DiscAdicElement<K> u_discriminant() const {
        auto four = from_integer_like(s, BigInt(4));
        return s * s - four * u0;
    }
};

template <class K>
RamifiedQuadratic<K> ramified_factor(const DepressedQuartic<RationalFunction<K>>& g,
                                     const LiftConfig& cfg) {
    cfg.validate();
    using F = RationalFunction<K>;
    if (is_zero(g.d))
        throw domain_error("ramified factor needs d != 0 (s = d/rho degenerates)");
    const int N = cfg.truncation_order;

    ResolventPair<K> pair = resolvents(g);
    auto [alpha3, alpha4] = resolvent_roots(pair, cfg);
    RhoSeries<K> rho = rho_series(alpha4, g, cfg);

    auto embed = [&](const F& x) {
        return DiscAdicElement<K>::constant(alpha4.pi_ptr(), x, N);
    };
    auto k = [&](long n) { return embed(from_integer_like(g.c, BigInt(n))); };

    DiscAdicElement<K> s = embed(g.d) / rho.rho;
    DiscAdicElement<K> half = k(2).inverse();
    DiscAdicElement<K> r0 = half * (alpha4 + rho.rho);

    // s^2 = alpha3, and the two const-term expressions agree because
    // alpha3 = alpha4 - c
    if (!(s * s).congruent_to(alpha3))
        throw verification_error("s^2 does not match alpha3");
    if (!(alpha3 + embed(g.c)).congruent_to(alpha4))
        throw verification_error("alpha3 + c does not match alpha4");

    // long division of g by r: u = t^2 + s t + (c - r0 + s^2), remainders
    // must vanish mod pi^(N+1)
    DiscAdicElement<K> u0 = embed(g.c) - r0 + s * s;
    DiscAdicElement<K> rem1 = embed(g.d) - s * r0 + s * u0;
    DiscAdicElement<K> rem0 = embed(g.e) - r0 * u0;
    if (!rem1.is_zero_element() || !rem0.is_zero_element())
        throw verification_error("g is not divisible by r at this order");

    RamifiedQuadratic<K> out{std::move(s), std::move(r0), std::move(u0), N};

    // ramification: disc(r) vanishes at Delta = 0 while disc(u) does not
    if (!out.r_discriminant().valuation_lower_bound().at_least(1))
        throw verification_error("disc(r) is a unit: the factor is not the ramified one");
    if (is_zero(out.u_discriminant().coeff(0)))
        throw verification_error("disc(u) is not a unit: the cofactor ramified too");
    return out;
}

/// Numeric value of a disc-adic element at a rational/real point of the
/// coefficient space: sum coeff_k(point) * pi(point)^k.
template <class T>
T eval_disc_adic(const DiscAdicElement<Rational>& a, const std::vector<T>& point) {
    const T zero{};
    T piv = a.pi().eval(point, zero);
    T acc = zero, power = piv * 0.0 + 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (!is_zero(a.coeff(k))) acc = acc + a.coeff(k).eval(point, zero) * power;
        power = power * piv;
    }
    return acc;
}

} // namespace discroot
