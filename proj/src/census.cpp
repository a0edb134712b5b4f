#include "discroot/census.hpp"

#include <cmath>
#include <random>

#include "discroot/real_cubic.hpp"

namespace discroot {

namespace {

const double kSqrt27 = std::sqrt(27.0);
const double kCbrt4 = std::cbrt(4.0);

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// area under min(sqrt(a p^3), cap) for p in [0, upto]
double clipped_curve_area(double a, double cap, double upto) {
    double pc = std::cbrt(cap * cap / a);
    if (pc >= upto) return 0.4 * std::sqrt(a) * std::pow(upto, 2.5);
    return 0.4 * std::sqrt(a) * std::pow(pc, 2.5) + (upto - pc) * cap;
}

} // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 step on master + stream
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double CensusConfig::window_p() const {
    return height_mode == HeightMode::naive_height ? h * h / kCbrt4 : h * h * h / kSqrt27;
}

double CensusConfig::window_q() const {
    return h * h * h / kSqrt27;
}

std::string region_name(RegionLabel label) {
    switch (label) {
    case RegionLabel::disc_positive_both_converge: return "disc_positive_both_converge";
    case RegionLabel::disc_negative_trinomial_converges:
        return "disc_negative_trinomial_converges";
    case RegionLabel::disc_negative_disc_converges: return "disc_negative_disc_converges";
    case RegionLabel::neither: return "neither";
    }
    return "?";
}

RegionLabel classify_point(double p, double q, double boundary_tol) {
    if (!(std::isfinite(p) && std::isfinite(q)))
        throw domain_error("classify_point needs finite coordinates");
    if (p == 0.0 || q <= 0.0) throw domain_error("classify_point needs p != 0 and q > 0");

    const double q2 = q * q;
    auto near = [&](double crit) {
        return std::abs(q2 - crit) <= boundary_tol * std::max(q2, std::abs(crit));
    };

    if (p < 0.0) {
        const double delta_zero = -4.0 * p * p * p / 27.0;  // q^2 here means Delta = 0
        const double disc_edge = 2.0 * delta_zero;          // |Delta| = 4|p|^3
        if (near(delta_zero) || near(disc_edge)) throw boundary_error("on a region boundary");
        if (q2 < delta_zero) return RegionLabel::disc_positive_both_converge;
        if (q2 < disc_edge) return RegionLabel::disc_negative_disc_converges;
        return RegionLabel::neither;
    }
    const double tri_edge = 4.0 * p * p * p / 27.0; // 27 q^2 = 4 p^3
    if (near(tri_edge)) throw boundary_error("on a region boundary");
    if (q2 < tri_edge) return RegionLabel::disc_negative_trinomial_converges;
    return RegionLabel::neither;
}

RegionAreas region_areas(const CensusConfig& cfg) {
    cfg.validate();
    RegionAreas out;
    out.cfg = cfg;
    const double P = cfg.window_p();
    const double Q = cfg.height_mode == HeightMode::naive_height ? cfg.window_q()
                                                                 : cfg.window_p();
    const double rect_area = 2.0 * P * Q;

    // analytic fractions
    double a1, a2, a3;
    if (cfg.height_mode == HeightMode::naive_height) {
        // curves meet the rectangle corners; the disc-convergence region
        // is counted between its curves (it is sqrt(2)-1 times the
        // Delta>0 region), matching the 20/20/8 tally
        a1 = 0.2;
        a2 = 0.2;
        a3 = (std::sqrt(2.0) - 1.0) / 5.0;
        out.sampled_q_top = std::sqrt(2.0) * Q;
    } else {
        const double under4 = clipped_curve_area(4.0 / 27.0, Q, P);
        const double under8 = clipped_curve_area(8.0 / 27.0, Q, P);
        a1 = under4 / rect_area;
        a2 = under4 / rect_area;
        a3 = (under8 - under4) / rect_area;
        out.sampled_q_top = Q;
    }
    out.regions[0] = {RegionLabel::disc_positive_both_converge, a1, 0.0, 0.0, 0};
    out.regions[1] = {RegionLabel::disc_negative_trinomial_converges, a2, 0.0, 0.0, 0};
    out.regions[2] = {RegionLabel::disc_negative_disc_converges, a3, 0.0, 0.0, 0};
    out.regions[3] = {RegionLabel::neither, 1.0 - a1 - a2 - a3, 0.0, 0.0, 0};

    // Monte Carlo over [-P, P] x [0, sampled_q_top], normalized to the
    // reference rectangle
    std::mt19937_64 rng(split_seed(cfg.rng_seed, 0));
    const double window_scale = out.sampled_q_top / Q;
    long n = cfg.samples;
    for (long i = 0; i < n; ++i) {
        double p = uniform(rng, -P, P);
        double q = uniform(rng, 0.0, out.sampled_q_top);
        RegionLabel label;
        try {
            label = classify_point(p, q);
        } catch (const boundary_error&) {
            ++out.boundary_skipped;
            continue;
        } catch (const domain_error&) {
            ++out.boundary_skipped; // p == 0 or q == 0 draw
            continue;
        }
        for (auto& r : out.regions)
            if (r.label == label) {
                // 'neither' is only meaningful inside the reference rectangle
                if (label != RegionLabel::neither || q <= Q) ++r.hits;
            }
    }
    for (int k = 0; k < 3; ++k) {
        auto& r = out.regions[k];
        double phat = static_cast<double>(r.hits) / static_cast<double>(n);
        r.mc = window_scale * phat;
        r.std_error = window_scale * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n));
    }
    // 'neither' is reported as the complement so both columns follow the
    // same (between-the-curves) convention for region 3 and sum to 1
    out.regions[3].mc = 1.0 - out.regions[0].mc - out.regions[1].mc - out.regions[2].mc;
    out.regions[3].std_error =
        std::sqrt(out.regions[0].std_error * out.regions[0].std_error +
                  out.regions[1].std_error * out.regions[1].std_error +
                  out.regions[2].std_error * out.regions[2].std_error);
    return out;
}

QuiltData quilt_data(const CensusConfig& cfg, int grid) {
    cfg.validate();
    if (grid < 2) throw domain_error("quilt grid must be at least 2");
    QuiltData out;
    const double P = cfg.window_p();
    const double Q = cfg.height_mode == HeightMode::naive_height ? cfg.window_q()
                                                                 : cfg.window_p();
    for (int i = 0; i < grid; ++i) {
        // cell centers
        double p = -P + (2.0 * P) * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            double q = Q * (j + 0.5) / grid;
            try {
                out.rows.push_back({p, q, classify_point(p, q)});
            } catch (const error&) {
                ++out.boundary_skipped;
            }
        }
    }
    for (int i = 0; i <= grid; ++i) {
        double p = P * i / grid;
        if (p > 0.0) {
            double cube = 4.0 * p * p * p / 27.0;
            out.curves.push_back({"delta_zero", -p, std::sqrt(cube)});
            out.curves.push_back({"disc_edge", -p, std::sqrt(2.0 * cube)});
            out.curves.push_back({"trinomial_edge", p, std::sqrt(cube)});
        }
    }
    return out;
}

QuarticCensus quartic_census_sample(const CensusConfig& cfg) {
    cfg.validate();
    QuarticCensus out;
    out.cfg = cfg;
    const double scales[3] = {1.0, 10.0, 100.0};
    for (int k = 0; k < 3; ++k) out.per_scale[k] = {scales[k], 0, 0, 0.0};

    std::mt19937_64 rng(split_seed(cfg.rng_seed, 1));
    const double h = cfg.h;
    for (long i = 0; i < cfg.samples; ++i) {
        double c = uniform(rng, -h, h);
        double d = uniform(rng, -h, h);
        double e = uniform(rng, -h, h);
        if (std::abs(d) <= 1e-12 * h) {
            ++out.excluded_small_d;
            continue;
        }
        for (int k = 0; k < 3; ++k) {
            const double m = scales[k];
            const double cs = c / (m * m);
            const double ds = d / (m * m * m);
            const double es = e / (m * m * m * m);
            // resolvent R3 of t^4 + cs t^2 + ds t + es, depressed
            const double b2 = 2.0 * cs;
            const double b1 = cs * cs - 4.0 * es;
            const double b0 = -ds * ds;
            const double p3 = b1 - b2 * b2 / 3.0;
            const double q3 = 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0;
            RealDepressedCubic dep{p3, q3};
            ++out.per_scale[k].tested;
            if (p3 == 0.0) continue;
            if (!convergence_check(dep, SeriesId::discriminant).converges()) continue;
            try {
                // conservative: samples too close to the boundary to sum
                // within the term budget count as not demonstrated
                RootReport root = discriminant_root(dep, 1e-9, 200000);
                double value = root.real_value() - b2 / 3.0;
                if (value > 0.0) ++out.per_scale[k].convergent_positive;
            } catch (const refusal_error&) {
            }
        }
    }
    for (auto& entry : out.per_scale)
        entry.fraction = entry.tested > 0 ? static_cast<double>(entry.convergent_positive) /
                                                static_cast<double>(entry.tested)
                                          : 0.0;
    return out;
}

} // namespace discroot
