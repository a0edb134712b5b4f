#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "discroot/errors.hpp"

namespace discroot {

// Point lies within relative tolerance of one of the region boundary
// curves; excluded from the census (measure zero).
struct boundary_error : error {
    using error::error;
};

enum class HeightMode { max_height, naive_height };

/// Census window.  Naive height: P = h^2/4^(1/3), Q = h^3/sqrt(27), the
/// scaling under which the two convergence boundary curves meet the
/// rectangle corners.  Max height: a square window; its side is taken as
/// the naive-height Q so the same h spans comparable coefficients in
/// both modes.
struct CensusConfig {
    HeightMode height_mode = HeightMode::naive_height;
    double h = 10.0;
    long samples = 100000;
    std::uint64_t rng_seed = 7;

    void validate() const {
        if (h <= 0.0) throw domain_error("height parameter must be positive");
        if (samples < 1) throw domain_error("need at least one sample");
    }
    double window_p() const; // half-width in p
    double window_q() const; // reference height in q (the rectangle top)
};

enum class RegionLabel {
    disc_positive_both_converge,
    disc_negative_trinomial_converges,
    disc_negative_disc_converges,
    neither,
};

std::string region_name(RegionLabel label);

/// Which series converge for t^3 + pt + q with q > 0, p != 0, by the
/// boundary-curve inequalities; throws boundary_error within relative
/// tolerance 1e-9 of a curve.
RegionLabel classify_point(double p, double q, double boundary_tol = 1e-9);

struct RegionEstimate {
    RegionLabel label = RegionLabel::neither;
    double analytic = 0.0;
    double mc = 0.0;
    double std_error = 0.0;
    long hits = 0;
};

struct RegionAreas {
    CensusConfig cfg;
    std::array<RegionEstimate, 4> regions;
    long boundary_skipped = 0;
    // sampling window actually used (naive mode samples up to sqrt(2) Q so
    // the disc-convergence sliver that pokes above the rectangle is seen;
    // fractions are normalized to the reference rectangle)
    double sampled_q_top = 0.0;
};

/// Analytic region fractions (closed forms) plus seeded Monte Carlo
/// estimates with standard errors.  Under naive height the analytic
/// truth is (1/5, 1/5, (sqrt(2)-1)/5), the disc-convergence region counted
/// between its curves as in the 48% tally.
RegionAreas region_areas(const CensusConfig& cfg);

struct QuiltRow {
    double p = 0.0, q = 0.0;
    RegionLabel label = RegionLabel::neither;
};
struct CurvePoint {
    std::string curve_id;
    double p = 0.0, q = 0.0;
};
struct QuiltData {
    std::vector<QuiltRow> rows;
    std::vector<CurvePoint> curves;
    long boundary_skipped = 0;
};

/// Grid of labeled (p, q) cells over the census window plus sampled
/// boundary curves q = sqrt(-4p^3/27), sqrt(-8p^3/27), sqrt(4p^3/27).
QuiltData quilt_data(const CensusConfig& cfg, int grid);

struct QuarticCensusEntry {
    double scale_m = 1.0;
    long tested = 0;
    long convergent_positive = 0;
    double fraction = 0.0;
};

struct QuarticCensus {
    CensusConfig cfg;
    std::array<QuarticCensusEntry, 3> per_scale; // m = 1, 10, 100
    long excluded_small_d = 0;
};

/// Sample depressed quartics with |c|,|d|,|e| <= h, scale each as
/// g(mt)/m^4 for m in {1, 10, 100}, and count how often the resolvent
/// R3's discriminant series converges to a positive root.  The counts
/// are identical across m: the scaling leaves the discriminant series
/// and the root's sign invariant, which this experiment demonstrates.
QuarticCensus quartic_census_sample(const CensusConfig& cfg);

// deterministic seed-splitting rule for sub-experiments
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

} // namespace discroot
