#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discroot/disc_adic.hpp"
#include "discroot/prime_field.hpp"

using namespace discroot;

namespace {

using QFun = RationalFunction<Rational>;
using FFun = RationalFunction<PrimeFieldElement>;

struct PqWorld {
    std::shared_ptr<const VarSet> vars = VarSet::make({"p", "q"});
    QFun p = QFun::variable(vars, 0, Rational(0));
    QFun q = QFun::variable(vars, 1, Rational(0));
    DepressedCubic<QFun> g{p, q};
    QFun seed = from_integer_like(p, BigInt(3)) * q / p;
};

} // namespace

TEST_CASE("normal form carries pi-multiples upward and is idempotent") {
    PqWorld w;
    QFun disc = cubic_discriminant(w.g);
    auto pi = std::make_shared<const MultiPoly<Rational>>(disc.num());

    // Delta * u at position 0 must migrate to position 1 as u
    QFun u = w.p / w.q;
    auto elem = DiscAdicElement<Rational>::constant(pi, disc * u, 3);
    CHECK(is_zero(elem.coeff(0)));
    CHECK(elem.coeff(1) == u);
    CHECK(is_zero(elem.coeff(2)));

    // past-the-end powers fall off
    auto high = DiscAdicElement<Rational>::constant(pi, disc.pow(5), 3);
    CHECK(high.is_zero_element());

    // idempotence: rebuilding from the normalized terms changes nothing
    auto rebuilt = DiscAdicElement<Rational>(elem.pi_ptr(), elem.terms());
    CHECK(rebuilt == elem);

    // a coefficient with negative valuation is outside the disk
    CHECK_THROWS_AS(DiscAdicElement<Rational>::constant(pi, u / disc, 3), verification_error);
}

TEST_CASE("discriminant root series: structure and postconditions") {
    PqWorld w;
    LiftConfig cfg{5, 0};
    auto alpha = discriminant_root_series(w.g, cfg);

    CHECK(alpha.coeff(0) == w.seed); // 3q/p
    // a_n = 3q/p * C(3n,n) * (-1/27 p^3)^n, already a unit decomposition
    QFun expect1 = w.seed * from_integer_like(w.p, BigInt(3)) *
                   from_integer_like(w.p, BigInt(-27)).inverse() * w.p.pow(-3);
    CHECK(alpha.coeff(1) == expect1);

    // substitution: valuation beyond the truncation order
    auto rep = verify_root(w.g, alpha);
    CHECK(rep.passes(5));

    // q = 0 gives the zero element
    DepressedCubic<QFun> g0{w.p, zero_like(w.q)};
    CHECK(discriminant_root_series(g0, cfg).is_zero_element());

    // p = 0 refused
    DepressedCubic<QFun> gp{zero_like(w.p), w.q};
    CHECK_THROWS_AS(discriminant_root_series(gp, cfg), domain_error);
}

TEST_CASE("Hensel lift agrees with the closed-form series (char 0)") {
    PqWorld w;
    for (int n = 1; n <= 5; ++n) {
        LiftConfig cfg{n, 0};
        auto series = discriminant_root_series(w.g, cfg);
        auto lift = hensel_lift_cubic(w.g.general(), w.seed, series.pi_ptr(), cfg);
        CHECK(series.congruent_to(lift));
        CHECK(lift.congruent_to(series));
        CHECK(verify_root(w.g, lift).passes(n));
        // the decompositions differ even though the elements agree
        if (n >= 1) CHECK(lift.coeff(0) == w.seed);
    }
}

TEST_CASE("Hensel preconditions are enforced") {
    PqWorld w;
    QFun disc = cubic_discriminant(w.g);
    auto pi = std::make_shared<const MultiPoly<Rational>>(disc.num());
    LiftConfig cfg{3, 0};
    // p itself is not a residue root
    CHECK_THROWS_AS(hensel_lift_cubic(w.g.general(), w.p, pi, cfg), hensel_error);
    // -3q/2p is the double residue root: f(seed) ~ 0 mod Delta but so is f'(seed)
    QFun dbl = from_integer_like(w.p, BigInt(-3)) * w.q /
               (from_integer_like(w.p, BigInt(2)) * w.p);
    CHECK_THROWS_AS(hensel_lift_cubic(w.g.general(), dbl, pi, cfg), hensel_error);
    // characteristic mismatch between config and ring
    LiftConfig bad{3, 2};
    CHECK_THROWS_AS(hensel_lift_cubic(w.g.general(), w.seed, pi, bad), ring_mismatch_error);
}

TEST_CASE("verify_root valuations") {
    PqWorld w;
    LiftConfig cfg{5, 0};
    auto alpha = discriminant_root_series(w.g, cfg);

    // exact rational root of the depressed (t-1)(t-2)(t-3): t^3 - t at
    // roots -1, 0, 1; embedded constants give exact zero -> infinite
    DepressedCubic<QFun> split{from_integer_like(w.p, BigInt(-1)), zero_like(w.q)};
    auto one = DiscAdicElement<Rational>::constant(alpha.pi_ptr(), one_like(w.p), 5);
    auto rep = verify_root(split, one);
    CHECK(rep.kind == ValuationReport::Kind::infinite);

    // the series root passes with valuation >= N+1
    auto rep2 = verify_root(w.g, alpha);
    CHECK(rep2.kind == ValuationReport::Kind::at_least);
    CHECK(rep2.v == 6);

    // perturbing by pi^3 drops the valuation to exactly 3
    QFun disc = cubic_discriminant(w.g);
    auto bump = DiscAdicElement<Rational>::constant(alpha.pi_ptr(), disc.pow(3), 5);
    auto rep3 = verify_root(w.g, alpha + bump);
    CHECK(rep3.kind == ValuationReport::Kind::exact);
    CHECK(rep3.v == 3);
}

TEST_CASE("characteristic 3: general cubic root series vs lift") {
    auto vars = VarSet::make({"c1", "c2", "c3"});
    PrimeFieldElement z3(0, 3);
    FFun c1 = FFun::variable(vars, 0, z3);
    FFun c2 = FFun::variable(vars, 1, z3);
    FFun c3 = FFun::variable(vars, 2, z3);
    GeneralCubic<FFun> f{c1, c2, c3};

    LiftConfig cfg{3, 3};
    auto alpha = char3_root_series(f, cfg);
    CHECK(alpha.coeff(0) == c2 / c1 - c1);
    CHECK(verify_root(f, alpha).passes(3));

    FFun seed = c2 / c1 - c1;
    auto lift = hensel_lift_cubic(f, seed, alpha.pi_ptr(), cfg);
    CHECK(alpha.congruent_to(lift));

    // c1 = 0 has no such root (depressed characteristic-3 cubic)
    GeneralCubic<FFun> dep{zero_like(c1), c2, c3};
    CHECK_THROWS_AS(char3_root_series(dep, cfg), domain_error);
}

TEST_CASE("characteristic 3 negative control") {
    CHECK(char3_depressed_residue_is_rootless());
}

TEST_CASE("characteristic 2: depressed root series vs lift") {
    auto vars = VarSet::make({"p", "q"});
    PrimeFieldElement z2(0, 2);
    FFun p = FFun::variable(vars, 0, z2);
    FFun q = FFun::variable(vars, 1, z2);
    DepressedCubic<FFun> g{p, q};

    LiftConfig cfg{4, 2};
    auto alpha = char2_root_series(g, cfg);
    // residue mod q is 0; mod q^2 it is q/p
    CHECK(is_zero(alpha.coeff(0)));
    CHECK(alpha.coeff(1) == p.inverse());
    CHECK(is_zero(alpha.coeff(2)));
    CHECK(alpha.coeff(3) == p.pow(-4)); // A_1(3,1) = 1 over p^4
    CHECK(verify_root(g, alpha).passes(4));

    auto lift = hensel_lift_cubic(g.general(), q / p, alpha.pi_ptr(), cfg);
    CHECK(alpha.congruent_to(lift));

    // same coefficients whether built from A_n(3,1) or binom(3n,n), mod 2
    for (int n = 0; 2 * n + 1 <= 4; ++n) {
        BigInt a = fuss_catalan(3, 1, static_cast<unsigned long>(n)) % 2;
        BigInt b = central_trinomial_coeff(static_cast<unsigned long>(n)) % 2;
        CHECK(a == b);
    }

    CHECK_THROWS_AS(char2_root_series(DepressedCubic<FFun>{zero_like(p), q}, cfg), domain_error);
}

TEST_CASE("characteristic 2: non-depressed generic cubic via delta") {
    auto vars = VarSet::make({"c1", "c2", "c3"});
    PrimeFieldElement z2(0, 2);
    GeneralCubic<FFun> f{FFun::variable(vars, 0, z2), FFun::variable(vars, 1, z2),
                         FFun::variable(vars, 2, z2)};
    // depression works in characteristic 2 (1/3 = 1) and lands pi = delta
    auto dep = depress_cubic(f);
    CHECK(dep.g.q == char2_delta(f));

    LiftConfig cfg{3, 2};
    auto alpha_dep = char2_root_series(dep.g, cfg);
    auto shift = DiscAdicElement<PrimeFieldElement>::constant(alpha_dep.pi_ptr(), dep.shift,
                                                              alpha_dep.order());
    auto alpha = alpha_dep + shift;
    CHECK(verify_root(f, alpha).passes(3));
}

TEST_CASE("pi mismatch between elements is rejected") {
    PqWorld w;
    QFun disc = cubic_discriminant(w.g);
    auto pi1 = std::make_shared<const MultiPoly<Rational>>(disc.num());
    auto pi2 = std::make_shared<const MultiPoly<Rational>>(w.p.num());
    auto a = DiscAdicElement<Rational>::constant(pi1, w.q, 3);
    auto b = DiscAdicElement<Rational>::constant(pi2, w.q, 3);
    CHECK_THROWS_AS(a + b, ring_mismatch_error);
}

TEST_CASE("disc-adic division round-trips") {
    PqWorld w;
    LiftConfig cfg{4, 0};
    auto alpha = discriminant_root_series(w.g, cfg);
    auto beta = alpha * alpha + one_like(alpha);
    auto gamma = beta / alpha;
    CHECK((gamma * alpha).congruent_to(beta));
    CHECK_THROWS_AS(zero_like(alpha).inverse(), domain_error);
}

TEST_CASE("rendering") {
    PqWorld w;
    LiftConfig cfg{2, 0};
    auto alpha = discriminant_root_series(w.g, cfg);
    CHECK(alpha.str() ==
          "(3*q/p) + (-1/3*q/p^4)*pi + (5/81*q/p^7)*pi^2 [pi = -4*p^3 - 27*q^2]");
}
