#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "discroot/cubic.hpp"
#include "discroot/errors.hpp"

namespace discroot {

/// t^3 + pt + q with double coefficients; Delta = -4p^3 - 27q^2.
struct RealDepressedCubic {
    double p = 0.0;
    double q = 0.0;

    double discriminant() const { return -4.0 * p * p * p - 27.0 * q * q; }
    double eval(double t) const { return (t * t + p) * t + q; }
    std::complex<double> eval(std::complex<double> t) const { return (t * t + p) * t + q; }

    void require_finite() const;
};

enum class SeriesId { discriminant, trinomial };

struct ConvergenceVerdict {
    SeriesId series = SeriesId::discriminant;
    enum class Kind { converges, diverges, boundary } verdict = Kind::boundary;
    double ratio = 0.0;  // |Delta| / 4|p|^3  or  27 q^2 / 4|p|^3
    double margin = 0.0;

    bool converges() const { return verdict == Kind::converges; }
    std::string verdict_name() const;
};

/// Ratio test against the 27/4 radius; within `margin` of ratio 1 the
/// verdict is boundary (evaluation there is refused, the behavior on the
/// boundary circle being deliberately out of scope).
ConvergenceVerdict convergence_check(const RealDepressedCubic& f, SeriesId series,
                                     double margin = 1e-6);

enum class RootMethod { discriminant_series, trinomial_series, trig0, trig1, trig2, oracle };
enum class RootClass { longest, shortest, middle, unique_real, not_applicable };
enum class SignLabel { positive, negative, zero };

struct RootReport {
    std::optional<std::complex<double>> value;
    RootMethod method = RootMethod::oracle;
    long terms_used = 0;
    bool converged = false;
    RootClass classification = RootClass::not_applicable;
    SignLabel sign = SignLabel::zero;
    double residual = 0.0;

    double real_value() const { return value ? value->real() : 0.0; }
    std::string json() const;
};

std::string method_name(RootMethod m);
std::string class_name(RootClass c);
std::string sign_name(SignLabel s);

/// Longest root of the depressed cubic by the discriminant series
/// 3q/p * sum C(3n,n) (-Delta/27p^3)^n.  Refuses divergent or boundary
/// input; geometric-tail stopping (three consecutive relatively-small
/// terms) with compensated summation.
RootReport discriminant_root(const RealDepressedCubic& f, double tol = 1e-12,
                             long max_terms = 1000000);

/// Root a*B_n(a^{n-1} c / b^n)/b of the trinomial a - b t + c t^n.
/// For a depressed cubic t^3 + pt + q, call with (q, -p, 1, 3).
RootReport trinomial_root(double a, double b, double c, int n, double tol = 1e-12,
                          long max_terms = 1000000);

/// All three roots by the classical cosine formulas; requires p < 0 and
/// the arccos argument within [-1, 1] (three real roots).
std::array<RootReport, 3> trig_roots(const RealDepressedCubic& f);

/// All three complex roots of the monic cubic t^3 + c1 t^2 + c2 t + c3,
/// closed-form with branch care and a Newton polish, sorted by magnitude
/// then argument.  This is the independent check the series evaluators
/// are measured against.
std::array<std::complex<double>, 3> oracle_roots(std::complex<double> c1,
                                                 std::complex<double> c2,
                                                 std::complex<double> c3);
std::array<std::complex<double>, 3> oracle_roots(const RealDepressedCubic& f);

struct ClassificationReport {
    double delta = 0.0;
    std::array<std::complex<double>, 3> roots{};  // sorted by magnitude
    std::optional<RootReport> disc;
    std::optional<RootReport> tri;
    bool ok = false;
    std::vector<std::string> failures;
};

/// Evaluate whichever series converge and check the longest/shortest
/// claims and the sign pattern against the oracle roots.  Preconditions:
/// p, q != 0 and Delta != 0; near-ties in magnitude are refused rather
/// than guessed.
ClassificationReport classify_roots(const RealDepressedCubic& f, double tol = 1e-9);

enum class SolveMethod { discriminant, trinomial, trig, oracle, auto_pick };

/// Root of the general cubic t^3 + c1 t^2 + c2 t + c3: depress, evaluate
/// by the chosen method, shift back by -c1/3.  auto_pick tries the
/// discriminant series first, then the trinomial series.
std::vector<RootReport> general_cubic_root(const GeneralCubic<double>& f, SolveMethod method,
                                           double tol = 1e-12, long max_terms = 1000000);

/// Partial sums of the discriminant series (terms through `count`),
/// exposed for the scaling-invariance checks.
std::vector<double> discriminant_series_partial_sums(const RealDepressedCubic& f, int count);

} // namespace discroot
