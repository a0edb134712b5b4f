#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "discroot/quartic_factor.hpp"
#include "discroot/real_cubic.hpp"
#include "oracle_helpers.hpp"

using namespace discroot;

namespace {

using QFun = RationalFunction<Rational>;

struct CdeWorld {
    std::shared_ptr<const VarSet> vars = VarSet::make({"c", "d", "e"});
    QFun c = QFun::variable(vars, 0, Rational(0));
    QFun d = QFun::variable(vars, 1, Rational(0));
    QFun e = QFun::variable(vars, 2, Rational(0));
    DepressedQuartic<QFun> g{c, d, e};

    QFun k(long n) const { return from_integer_like(c, BigInt(n)); }
};

// coefficients of the monic depressed quartic with the given roots
// (which must sum to zero)
DepressedQuartic<Rational> quartic_from_roots(const Rational& r1, const Rational& r2,
                                              const Rational& r3, const Rational& r4) {
    Rational c = r1 * r2 + r1 * r3 + r1 * r4 + r2 * r3 + r2 * r4 + r3 * r4;
    Rational d = -(r1 * r2 * r3 + r1 * r2 * r4 + r1 * r3 * r4 + r2 * r3 * r4);
    Rational e = r1 * r2 * r3 * r4;
    return {c, d, e};
}

} // namespace

TEST_CASE("resolvents") {
    CdeWorld w;
    auto pair = resolvents(w.g);
    CHECK(pair.r3.c1 == w.k(2) * w.c);
    CHECK(pair.r3.c2 == w.c * w.c - w.k(4) * w.e);
    CHECK(pair.r3.c3 == -(w.d * w.d));
    CHECK(pair.r4.c1 == -w.c);
    CHECK(pair.r4.c2 == w.k(-4) * w.e);
    CHECK(pair.r4.c3 == w.k(4) * w.c * w.e - w.d * w.d);

    // the constructor asserts Delta(R3) = Delta(R4) = Delta(g); pin the
    // numeric value for t^4 + t^2 + t + 1
    std::vector<Rational> pt{1, 1, 1};
    CHECK(pair.shared_discriminant.eval(pt, Rational(0)) == 257);

    // t^4 has both resolvents equal to t^3
    DepressedQuartic<QFun> t4{zero_like(w.c), zero_like(w.c), zero_like(w.c)};
    auto z = resolvents(t4);
    CHECK(is_zero(z.r3.c1));
    CHECK(is_zero(z.r3.c2));
    CHECK(is_zero(z.r3.c3));
    CHECK(is_zero(z.r4.c1));
    CHECK(is_zero(z.r4.c2));
    CHECK(is_zero(z.r4.c3));
}

TEST_CASE("resolvent roots: constant terms and lift oracle") {
    CdeWorld w;
    auto pair = resolvents(w.g);
    LiftConfig cfg{2, 0};
    auto [alpha3, alpha4] = resolvent_roots(pair, cfg);

    // alpha4's residue: (c^3 - 20ce + 9d^2)/(c^2 + 12e), worked out from
    // c/3 + 3 q4/p4 for the depressed R4
    QFun expect4 = (w.c.pow(3) - w.k(20) * w.c * w.e + w.k(9) * w.d * w.d) /
                   (w.c * w.c + w.k(12) * w.e);
    CHECK(alpha4.coeff(0) == expect4);
    // roots of R3 are roots of R4 shifted by -c
    CHECK(alpha3.coeff(0) == expect4 - w.c);

    CHECK(verify_root(pair.r3, alpha3).passes(2));
    CHECK(verify_root(pair.r4, alpha4).passes(2));

    // Newton-lift oracle agrees with both series
    auto lift4 = hensel_lift_cubic(pair.r4, expect4, alpha4.pi_ptr(), cfg);
    CHECK(alpha4.congruent_to(lift4));
    auto lift3 = hensel_lift_cubic(pair.r3, expect4 - w.c, alpha4.pi_ptr(), cfg);
    CHECK(alpha3.congruent_to(lift3));
}

TEST_CASE("rho series") {
    CdeWorld w;
    auto pair = resolvents(w.g);
    LiftConfig cfg{3, 0};
    auto [alpha3, alpha4] = resolvent_roots(pair, cfg);
    auto rho = rho_series(alpha4, w.g, cfg);

    // the tricky step: the constant term
    QFun expect0 = (w.k(8) * w.c * w.e - w.k(2) * w.c.pow(3) - w.k(9) * w.d * w.d) /
                   (w.k(2) * w.c * w.c + w.k(24) * w.e);
    CHECK(rho.rho.coeff(0) == expect0);

    // definitional postcondition, re-checked from outside
    auto embed = [&](const QFun& x) {
        return DiscAdicElement<Rational>::constant(alpha4.pi_ptr(), x, 3);
    };
    CHECK((rho.rho * rho.rho).congruent_to(alpha4 * alpha4 - embed(w.k(4) * w.e)));

    // singular seeds are refused: e = -c^2/12 makes 2c^2 + 24e vanish
    DepressedQuartic<QFun> sing{w.c, w.d, -(w.c * w.c) / w.k(12)};
    CHECK_THROWS_AS(rho_series(alpha4, sing, cfg), refusal_error);
    // and e = (2c^3 + 9d^2)/(8c) kills rho_0 itself
    DepressedQuartic<QFun> rho0zero{w.c, w.d,
                                    (w.k(2) * w.c.pow(3) + w.k(9) * w.d * w.d) / (w.k(8) * w.c)};
    CHECK_THROWS_AS(rho_series(alpha4, rho0zero, cfg), refusal_error);
}

TEST_CASE("ramified quadratic factor, symbolically at order 3") {
    CdeWorld w;
    LiftConfig cfg{3, 0};
    auto fac = ramified_factor(w.g, cfg);

    auto embed = [&](const QFun& x) {
        return DiscAdicElement<Rational>::constant(fac.s.pi_ptr(), x, 3);
    };

    // r(t) u(t) = g(t) coefficientwise mod Delta^4
    // t^2: u0 + r0 - s^2 = c; t^1: s(r0 - u0) = d; t^0: r0 u0 = e
    CHECK((fac.u0 + fac.const_term - fac.s * fac.s).congruent_to(embed(w.c)));
    CHECK((fac.s * (fac.const_term - fac.u0)).congruent_to(embed(w.d)));
    CHECK((fac.const_term * fac.u0).congruent_to(embed(w.e)));

    // ramification witness: disc(r) = (r1 - r2)^2 vanishes at Delta = 0
    CHECK(fac.r_discriminant().valuation_lower_bound().at_least(1));
    CHECK(!is_zero(fac.u_discriminant().coeff(0)));

    // d = 0 is rejected
    DepressedQuartic<QFun> d0{w.c, zero_like(w.d), w.e};
    CHECK_THROWS_AS(ramified_factor(d0, cfg), domain_error);
}

TEST_CASE("numeric specializations: r(t) picks the colliding pair") {
    CdeWorld w;
    LiftConfig cfg{3, 0};
    auto fac = ramified_factor(w.g, cfg);

    std::mt19937_64 rng(555);
    auto rand_rat = [&](long lo_num, long span_num, long den) {
        return make_rational(lo_num + static_cast<long>(rng() % static_cast<unsigned long>(span_num)),
                             den);
    };

    int tested = 0;
    while (tested < 50) {
        // roots {a, a+eps, b, -(2a+eps+b)}: one close pair near -1, the
        // other two roots well separated, everything O(1)
        Rational a = rand_rat(-80, 32, 64);          // [-1.25, -0.75)
        Rational b = rand_rat(26, 26, 64);           // [0.40, 0.81)
        Rational eps = make_rational(1, 100);
        Rational r4 = -(a + a + eps + b);
        auto g = quartic_from_roots(a, a + eps, b, r4);
        if (g.d == 0) continue;

        // accept only samples where the order-3 truncation is numerically
        // tight: resolvent discriminant ratio well inside the region
        double cd = g.c.get_d(), ed = g.e.get_d();
        double delta = quartic_discriminant(g).get_d();
        double p4 = -cd * cd / 3.0 - 4.0 * ed;
        if (p4 == 0.0 || std::abs(delta) > 1e-3 * 4.0 * std::pow(std::abs(p4), 3)) continue;

        std::vector<double> pt{cd, g.d.get_d(), ed};
        double s_num = eval_disc_adic(fac.s, pt);
        double r0_num = eval_disc_adic(fac.const_term, pt);
        double u0_num = eval_disc_adic(fac.u0, pt);

        // roots of t^2 - s t + r0
        std::complex<double> sq = std::sqrt(std::complex<double>(s_num * s_num - 4.0 * r0_num, 0.0));
        std::complex<double> z1 = (std::complex<double>(s_num, 0.0) + sq) * 0.5;
        std::complex<double> z2 = (std::complex<double>(s_num, 0.0) - sq) * 0.5;

        const double a_d = a.get_d(), a2_d = Rational(a + eps).get_d();
        double err = std::min(std::abs(z1 - std::complex<double>(a_d, 0.0)) +
                                  std::abs(z2 - std::complex<double>(a2_d, 0.0)),
                              std::abs(z2 - std::complex<double>(a_d, 0.0)) +
                                  std::abs(z1 - std::complex<double>(a2_d, 0.0)));
        CAPTURE(cd);
        CAPTURE(pt[1]);
        CAPTURE(ed);
        CHECK(err < 1e-6);

        // rho = r(0) - u(0) against the paired numeric roots
        double rho_eval = r0_num - u0_num;
        double rho_roots = a_d * a2_d - b.get_d() * r4.get_d();
        CHECK(std::abs(rho_eval - rho_roots) < 1e-6 * std::max(1.0, std::abs(rho_roots)));
        ++tested;
    }
    CHECK(tested == 50);
}

TEST_CASE("symbolic factor evaluated near a specialization matches durand-kerner") {
    CdeWorld w;
    LiftConfig cfg{3, 0};
    auto fac = ramified_factor(w.g, cfg);

    // t^4 with roots {1/2, 1/2 + 1/64, -2, 1 - 1/64 - ... } built from sum zero
    Rational a = make_rational(1, 2), eps = make_rational(1, 64), b = make_rational(-2, 1);
    Rational last = -(a + a + eps + b);
    auto g = quartic_from_roots(a, a + eps, b, last);
    REQUIRE(g.d != 0);
    std::vector<double> pt{g.c.get_d(), g.d.get_d(), g.e.get_d()};

    double s_num = eval_disc_adic(fac.s, pt);
    double r0_num = eval_disc_adic(fac.const_term, pt);

    auto qroots = oracle::durand_kerner(
        {{g.e.get_d(), 0.0}, {g.d.get_d(), 0.0}, {g.c.get_d(), 0.0}, {0.0, 0.0}});
    // the two closest quartic roots
    double best = 1e18;
    std::pair<std::complex<double>, std::complex<double>> pairq;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::abs(qroots[i] - qroots[j]) < best) {
                best = std::abs(qroots[i] - qroots[j]);
                pairq = {qroots[i], qroots[j]};
            }
    // compare symmetric functions of the pair with (s, r0)
    CHECK(std::abs((pairq.first + pairq.second).real() - s_num) < 1e-6);
    CHECK(std::abs((pairq.first * pairq.second).real() - r0_num) < 1e-6);
}
