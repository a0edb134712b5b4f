#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "discroot/census.hpp"
#include "discroot/real_cubic.hpp"
#include "oracle_helpers.hpp"

using namespace discroot;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

} // namespace

TEST_CASE("classify_point region predicates") {
    // q < sqrt(-4p^3/27) = 2 at p = -3
    CHECK(classify_point(-3.0, 0.5) == RegionLabel::disc_positive_both_converge);
    // 27 q^2 = 0.27 < 4 at p = 1
    CHECK(classify_point(1.0, 0.1) == RegionLabel::disc_negative_trinomial_converges);
    // 2 < 2.5 < sqrt(8) ~ 2.828
    CHECK(classify_point(-3.0, 2.5) == RegionLabel::disc_negative_disc_converges);
    CHECK(classify_point(-3.0, 3.0) == RegionLabel::neither);
    CHECK(classify_point(2.0, 50.0) == RegionLabel::neither);

    CHECK_THROWS_AS(classify_point(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(classify_point(1.0, -1.0), domain_error);
    CHECK_THROWS_AS(classify_point(-3.0, 2.0), boundary_error);              // Delta = 0 curve
    CHECK_THROWS_AS(classify_point(-3.0, std::sqrt(8.0)), boundary_error);   // |Delta| = 4|p|^3
    CHECK_THROWS_AS(classify_point(3.0, 2.0), boundary_error);               // trinomial edge
}

TEST_CASE("classify_point agrees with the series convergence predicates") {
    std::mt19937_64 rng(2026);
    int tested = 0;
    while (tested < 10000) {
        double p = uniform(rng, -5.0, 5.0);
        double q = uniform(rng, 1e-6, 5.0);
        RegionLabel label;
        try {
            label = classify_point(p, q);
        } catch (const error&) {
            continue;
        }
        RealDepressedCubic f{p, q};
        bool disc = convergence_check(f, SeriesId::discriminant, 1e-12).converges();
        bool tri = convergence_check(f, SeriesId::trinomial, 1e-12).converges();
        double delta = f.discriminant();
        RegionLabel expect;
        if (delta > 0.0)
            expect = RegionLabel::disc_positive_both_converge;
        else if (tri)
            expect = RegionLabel::disc_negative_trinomial_converges;
        else if (disc)
            expect = RegionLabel::disc_negative_disc_converges;
        else
            expect = RegionLabel::neither;
        CAPTURE(p);
        CAPTURE(q);
        CHECK(label == expect);
        if (label == RegionLabel::disc_positive_both_converge) {
            CHECK(disc);
            CHECK(tri);
        }
        ++tested;
    }
}

TEST_CASE("naive-height analytic fractions and quadrature oracle") {
    CensusConfig cfg{HeightMode::naive_height, 10.0, 1000, 7};
    auto areas = region_areas(cfg);
    CHECK(areas.regions[0].analytic == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(areas.regions[1].analytic == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(areas.regions[2].analytic ==
          doctest::Approx((std::sqrt(2.0) - 1.0) / 5.0).epsilon(1e-15));

    // independent quadrature of the defining integrals
    const double P = cfg.window_p(), Q = cfg.window_q();
    double a1 = oracle::integrate([](double p) { return std::sqrt(4.0 * p * p * p / 27.0); },
                                  0.0, P, 1e-9);
    CHECK(std::abs(a1 / (2.0 * P * Q) - 0.2) < 1e-12);
    double a3 = oracle::integrate(
        [](double p) {
            return std::sqrt(8.0 * p * p * p / 27.0) - std::sqrt(4.0 * p * p * p / 27.0);
        },
        0.0, P, 1e-9);
    CHECK(std::abs(a3 / (2.0 * P * Q) - (std::sqrt(2.0) - 1.0) / 5.0) < 1e-12);

    // the curves meet the rectangle corners under this scaling
    CHECK(std::sqrt(4.0 * P * P * P / 27.0) == doctest::Approx(Q).epsilon(1e-12));
}

TEST_CASE("Monte Carlo matches analytic at the 1/sqrt(N) rate") {
    for (long n : {10000L, 100000L, 1000000L}) {
        CensusConfig cfg{HeightMode::naive_height, 10.0, n, 7};
        auto areas = region_areas(cfg);
        for (const auto& r : areas.regions) {
            CAPTURE(n);
            CAPTURE(region_name(r.label));
            double err = std::abs(r.mc - r.analytic);
            double band = 4.0 * std::max(r.std_error, 1e-12);
            CHECK(err <= band);
        }
    }
    // determinism under a fixed seed
    CensusConfig cfg{HeightMode::naive_height, 10.0, 20000, 99};
    auto a = region_areas(cfg);
    auto b = region_areas(cfg);
    for (int i = 0; i < 4; ++i) CHECK(a.regions[i].mc == b.regions[i].mc);
}

TEST_CASE("max-height trend toward full trinomial convergence") {
    // the trinomial series converges on regions 0 and 1 (for p < 0 the
    // Delta > 0 region has 27q^2 < 4|p|^3 too)
    double last = 0.0;
    for (double h : {10.0, 100.0, 1000.0}) {
        CensusConfig cfg{HeightMode::max_height, h, 50000, 11};
        auto areas = region_areas(cfg);
        double tri = areas.regions[0].analytic + areas.regions[1].analytic;
        double tri_mc = areas.regions[0].mc + areas.regions[1].mc;
        double band = 4.0 * (areas.regions[0].std_error + areas.regions[1].std_error);
        CHECK(tri > last);
        last = tri;
        CHECK(std::abs(tri_mc - tri) <= band);
    }
    CHECK(last >= 0.99); // h = 1000
}

TEST_CASE("quilt data") {
    CensusConfig cfg{HeightMode::naive_height, 2.0, 1000, 7};
    auto quilt = quilt_data(cfg, 16);
    CHECK(quilt.rows.size() + static_cast<std::size_t>(quilt.boundary_skipped) == 16u * 16u);

    long counts[4] = {0, 0, 0, 0};
    for (const auto& row : quilt.rows) counts[static_cast<int>(row.label)]++;
    long total = counts[0] + counts[1] + counts[2] + counts[3];
    CHECK(total == static_cast<long>(quilt.rows.size())); // labels partition the grid

    for (const auto& c : quilt.curves) {
        double lhs = c.q * c.q;
        double cube = 4.0 * std::abs(c.p * c.p * c.p) / 27.0;
        if (c.curve_id == "delta_zero" || c.curve_id == "trinomial_edge")
            CHECK(lhs == doctest::Approx(cube).epsilon(1e-12));
        else
            CHECK(lhs == doctest::Approx(2.0 * cube).epsilon(1e-12));
    }
    // spec'd sample values at p = -3: q = 2 on the Delta=0 curve, sqrt(8)
    // on the disc-convergence edge
    CHECK(std::sqrt(4.0 * 27.0 / 27.0) == doctest::Approx(2.0));
    CHECK(std::sqrt(8.0 * 27.0 / 27.0) == doctest::Approx(std::sqrt(8.0)));

    // same labels for q and -q: the predicates only see q^2
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        double p = uniform(rng, -3.0, 3.0), q = uniform(rng, 0.01, 3.0);
        RealDepressedCubic f{p, q}, g{p, -q};
        if (p == 0.0) continue;
        CHECK(convergence_check(f, SeriesId::discriminant).ratio ==
              convergence_check(g, SeriesId::discriminant).ratio);
        CHECK(convergence_check(f, SeriesId::trinomial).ratio ==
              convergence_check(g, SeriesId::trinomial).ratio);
    }

    CHECK_THROWS_AS(quilt_data(cfg, 1), domain_error);
}

TEST_CASE("quartic census") {
    CensusConfig cfg{HeightMode::max_height, 1e8, 4000, 7};
    auto qc = quartic_census_sample(cfg);
    // the m-scaling leaves the series and sign invariant: equal fractions
    CHECK(qc.per_scale[0].fraction == qc.per_scale[1].fraction);
    CHECK(qc.per_scale[1].fraction == qc.per_scale[2].fraction);
    CHECK(qc.per_scale[2].fraction >= 0.99);

    // near-degenerate regime of the worked example: d, e tiny and c = 1
    // gives a positive root near zero
    RealDepressedCubic dep;
    {
        double c = 1.0, d = 1e-4, e = 1e-5;
        double b2 = 2.0 * c, b1 = c * c - 4.0 * e, b0 = -d * d;
        dep = {b1 - b2 * b2 / 3.0, 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0};
        auto root = discriminant_root(dep);
        double value = root.real_value() - b2 / 3.0;
        CHECK(value > 0.0);
        CHECK(value < 1e-3);
    }
}

TEST_CASE("seed splitting is deterministic") {
    CHECK(split_seed(7, 0) == split_seed(7, 0));
    CHECK(split_seed(7, 0) != split_seed(7, 1));
    CHECK(split_seed(7, 0) != split_seed(8, 0));
}
