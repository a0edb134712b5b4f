#include "discroot/real_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace discroot {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

SignLabel sign_of(double x, double scale) {
    if (std::abs(x) <= 1e-12 * std::max(1.0, scale)) return SignLabel::zero;
    return x > 0 ? SignLabel::positive : SignLabel::negative;
}

} // namespace

void RealDepressedCubic::require_finite() const {
    if (!std::isfinite(p) || !std::isfinite(q))
        throw domain_error("cubic coefficients must be finite");
}

std::string ConvergenceVerdict::verdict_name() const {
    switch (verdict) {
    case Kind::converges: return "converges";
    case Kind::diverges: return "diverges";
    case Kind::boundary: return "boundary";
    }
    return "?";
}

ConvergenceVerdict convergence_check(const RealDepressedCubic& f, SeriesId series, double margin) {
    f.require_finite();
    if (f.p == 0.0) throw domain_error("convergence check needs p != 0");
    const double p3 = 4.0 * std::abs(f.p) * std::abs(f.p) * std::abs(f.p);
    ConvergenceVerdict v;
    v.series = series;
    v.margin = margin;
    v.ratio = (series == SeriesId::discriminant ? std::abs(f.discriminant()) : 27.0 * f.q * f.q) / p3;
    if (v.ratio < 1.0 - margin)
        v.verdict = ConvergenceVerdict::Kind::converges;
    else if (v.ratio > 1.0 + margin)
        v.verdict = ConvergenceVerdict::Kind::diverges;
    else
        v.verdict = ConvergenceVerdict::Kind::boundary;
    return v;
}

std::string method_name(RootMethod m) {
    switch (m) {
    case RootMethod::discriminant_series: return "discriminant_series";
    case RootMethod::trinomial_series: return "trinomial_series";
    case RootMethod::trig0: return "trig_0";
    case RootMethod::trig1: return "trig_1";
    case RootMethod::trig2: return "trig_2";
    case RootMethod::oracle: return "oracle";
    }
    return "?";
}

std::string class_name(RootClass c) {
    switch (c) {
    case RootClass::longest: return "longest";
    case RootClass::shortest: return "shortest";
    case RootClass::middle: return "middle";
    case RootClass::unique_real: return "unique_real";
    case RootClass::not_applicable: return "not_applicable";
    }
    return "?";
}

std::string sign_name(SignLabel s) {
    switch (s) {
    case SignLabel::positive: return "positive";
    case SignLabel::negative: return "negative";
    case SignLabel::zero: return "zero";
    }
    return "?";
}

std::string RootReport::json() const {
    std::ostringstream os;
    os << "{";
    if (value) {
        if (value->imag() == 0.0)
            os << "\"value\":" << format_double(value->real()) << ",";
        else
            os << "\"value\":{\"re\":" << format_double(value->real())
               << ",\"im\":" << format_double(value->imag()) << "},";
    } else {
        os << "\"value\":null,";
    }
    os << "\"method\":\"" << method_name(method) << "\","
       << "\"terms_used\":" << terms_used << ","
       << "\"converged\":" << (converged ? "true" : "false") << ","
       << "\"classification\":\"" << class_name(classification) << "\","
       << "\"sign\":\"" << sign_name(sign) << "\","
       << "\"residual\":" << format_double(residual) << "}";
    return os.str();
}

RootReport discriminant_root(const RealDepressedCubic& f, double tol, long max_terms) {
    f.require_finite();
    if (f.p == 0.0) throw domain_error("discriminant root needs p != 0");

    RootReport rep;
    rep.method = RootMethod::discriminant_series;
    if (f.q == 0.0) {
        // 3q/p * lambda is 0 whatever the series does (and with q = 0 the
        // ratio sits exactly on the boundary)
        rep.value = std::complex<double>(0.0, 0.0);
        rep.converged = true;
        rep.terms_used = 1;
        rep.residual = 0.0;
        rep.sign = SignLabel::zero;
        return rep;
    }

    ConvergenceVerdict verdict = convergence_check(f, SeriesId::discriminant);
    if (!verdict.converges())
        throw refusal_error("discriminant series " + verdict.verdict_name() +
                            " (ratio " + format_double(verdict.ratio) + ")");

    const double d = -f.discriminant() / (27.0 * f.p * f.p * f.p);
    CompensatedSum sum;
    double term = 1.0;
    int small_streak = 0;
    long n = 0;
    for (; n < max_terms; ++n) {
        sum.add(term);
        if (std::abs(term) < tol * std::abs(sum.value())) {
            if (++small_streak >= 3) {
                ++n;
                break;
            }
        } else {
            small_streak = 0;
        }
        // t_{n+1}/t_n = 3(3n+2)(3n+1) / (2(2n+1)(n+1)) * d
        const double dn = static_cast<double>(n);
        term *= 3.0 * (3.0 * dn + 2.0) * (3.0 * dn + 1.0) /
                (2.0 * (2.0 * dn + 1.0) * (dn + 1.0)) * d;
    }
    if (n >= max_terms)
        throw refusal_error("discriminant series did not meet tolerance within max_terms");

    const double alpha = 3.0 * f.q / f.p * sum.value();
    rep.value = std::complex<double>(alpha, 0.0);
    rep.converged = true;
    rep.terms_used = n;
    rep.residual = std::abs(f.eval(alpha));
    rep.sign = sign_of(alpha, std::max(std::abs(f.p), std::abs(f.q)));
    return rep;
}

RootReport trinomial_root(double a, double b, double c, int n, double tol, long max_terms) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw domain_error("trinomial coefficients must be finite");
    if (n < 2) throw domain_error("trinomial exponent must be >= 2");
    if (b == 0.0)
        throw domain_error("trinomial root needs b != 0 (otherwise take n-th roots of -a/c)");

    RootReport rep;
    rep.method = RootMethod::trinomial_series;
    auto finish = [&](double alpha, long terms) {
        rep.value = std::complex<double>(alpha, 0.0);
        rep.converged = true;
        rep.terms_used = terms;
        double monomial = c;
        for (int i = 0; i < n; ++i) monomial *= alpha;
        rep.residual = std::abs(a - b * alpha + monomial);
        rep.sign = sign_of(alpha, std::max({std::abs(a), std::abs(b), std::abs(c)}));
        return rep;
    };

    if (a == 0.0) return finish(0.0, 1);
    if (c == 0.0) return finish(a / b, 1);

    double z = c / b;
    for (int i = 0; i < n - 1; ++i) z *= a / b;
    const double radius = std::pow(static_cast<double>(n) - 1.0, n - 1) /
                          std::pow(static_cast<double>(n), n);
    const double ratio = std::abs(z) / radius;
    const double margin = 1e-6;
    if (ratio >= 1.0 - margin)
        throw refusal_error(std::string("trinomial series ") +
                            (ratio > 1.0 + margin ? "diverges" : "at the convergence boundary") +
                            " (ratio " + format_double(ratio) + ")");

    CompensatedSum sum;
    double term = 1.0;
    int small_streak = 0;
    long m = 0;
    for (; m < max_terms; ++m) {
        sum.add(term);
        if (std::abs(term) < tol * std::abs(sum.value())) {
            if (++small_streak >= 3) {
                ++m;
                break;
            }
        } else {
            small_streak = 0;
        }
        // A_{m+1}(n,1)/A_m(n,1) = prod_{i=1..n}(mn+i) / ((m+1) prod_{i=2..n}(m(n-1)+i))
        const double dm = static_cast<double>(m);
        double num = 1.0, den = dm + 1.0;
        for (int i = 1; i <= n; ++i) num *= dm * n + i;
        for (int i = 2; i <= n; ++i) den *= dm * (n - 1) + i;
        term *= num / den * z;
    }
    if (m >= max_terms)
        throw refusal_error("trinomial series did not meet tolerance within max_terms");
    return finish(a / b * sum.value(), m);
}

std::array<RootReport, 3> trig_roots(const RealDepressedCubic& f) {
    f.require_finite();
    if (f.p >= 0.0) throw domain_error("trigonometric roots need p < 0");
    double x = 3.0 * f.q / (2.0 * f.p) * std::sqrt(-3.0 / f.p);
    if (std::abs(x) > 1.0 + 1e-12)
        throw domain_error("trigonometric roots need |3q/(2p) sqrt(-3/p)| <= 1");
    x = std::clamp(x, -1.0, 1.0);
    const double r = 2.0 * std::sqrt(-f.p / 3.0);
    const double theta = std::acos(x) / 3.0;

    std::array<RootReport, 3> out;
    const RootMethod methods[3] = {RootMethod::trig0, RootMethod::trig1, RootMethod::trig2};
    for (int k = 0; k < 3; ++k) {
        double t = r * std::cos(theta - 2.0 * kPi * k / 3.0);
        RootReport rep;
        rep.method = methods[k];
        rep.value = std::complex<double>(t, 0.0);
        rep.converged = true;
        rep.terms_used = 0;
        rep.residual = std::abs(f.eval(t));
        rep.sign = sign_of(t, std::max(std::abs(f.p), std::abs(f.q)));
        out[static_cast<std::size_t>(k)] = rep;
    }
    return out;
}

namespace {

std::complex<double> eval_monic_cubic(std::complex<double> c1, std::complex<double> c2,
                                      std::complex<double> c3, std::complex<double> t) {
    return ((t + c1) * t + c2) * t + c3;
}

} // namespace

std::array<std::complex<double>, 3> oracle_roots(std::complex<double> c1, std::complex<double> c2,
                                                 std::complex<double> c3) {
    using C = std::complex<double>;
    const C third(1.0 / 3.0, 0.0);
    const C shift = c1 * third;
    const C p = c2 - c1 * c1 * third;
    const C q = 2.0 * c1 * c1 * c1 / 27.0 - c1 * c2 * third + c3;

    std::array<C, 3> roots;
    const double scale = std::max({1.0, std::abs(p), std::abs(q)});
    if (std::abs(p) < 1e-300 && std::abs(q) < 1e-300) {
        roots = {-shift, -shift, -shift};
    } else {
        const C w(-0.5, std::sqrt(3.0) / 2.0); // primitive cube root of unity
        if (std::abs(p) == 0.0) {
            C r = std::pow(-q, third);
            roots = {r - shift, r * w - shift, r * w * w - shift};
        } else {
            const C sqrt_term = std::sqrt(q * q * 0.25 + p * p * p / 27.0);
            C s0 = -q * 0.5 + sqrt_term;
            C s1 = -q * 0.5 - sqrt_term;
            C s = std::abs(s0) >= std::abs(s1) ? s0 : s1; // avoid cancellation
            C u = std::pow(s, third);
            for (int k = 0; k < 3; ++k) {
                C uk = u;
                for (int j = 0; j < k; ++j) uk *= w;
                roots[static_cast<std::size_t>(k)] = uk - p / (3.0 * uk) - shift;
            }
        }
    }

    // Newton polish on the original cubic
    for (auto& r : roots) {
        for (int it = 0; it < 30; ++it) {
            C fx = eval_monic_cubic(c1, c2, c3, r);
            if (std::abs(fx) < 1e-14 * scale) break;
            C fpx = (3.0 * r + 2.0 * c1) * r + c2;
            if (std::abs(fpx) < 1e-100) break; // repeated root: leave as is
            r -= fx / fpx;
        }
        if (std::abs(r.imag()) < 1e-12 * std::max(1.0, std::abs(r.real())))
            r = C(r.real(), 0.0); // snap near-real roots
    }

    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

std::array<std::complex<double>, 3> oracle_roots(const RealDepressedCubic& f) {
    f.require_finite();
    return oracle_roots({0.0, 0.0}, {f.p, 0.0}, {f.q, 0.0});
}

ClassificationReport classify_roots(const RealDepressedCubic& f, double tol) {
    f.require_finite();
    if (f.p == 0.0 || f.q == 0.0) throw domain_error("classification needs p, q != 0");
    ClassificationReport rep;
    rep.delta = f.discriminant();
    if (rep.delta == 0.0) throw domain_error("classification needs Delta != 0");

    rep.roots = oracle_roots(f); // sorted by magnitude
    const double m0 = std::abs(rep.roots[0]);
    const double m1 = std::abs(rep.roots[1]);
    const double m2 = std::abs(rep.roots[2]);

    const double scale = std::max(std::abs(f.p), std::abs(f.q));
    auto check = [&](bool cond, const std::string& what) {
        if (!cond) rep.failures.push_back(what);
    };

    if (convergence_check(f, SeriesId::discriminant).converges()) {
        // the "longest" claim needs the maximum magnitude to be isolated
        // (a conjugate pair on the short side ties harmlessly)
        if (m2 - m1 <= tol * std::max(1.0, m2))
            throw refusal_error("largest root magnitudes too close to classify");
        RootReport r = discriminant_root(f);
        r.classification = RootClass::longest;
        const double alpha = r.real_value();
        check(std::abs(std::abs(alpha) - m2) <= 1e-8 * std::max(1.0, m2),
              "discriminant root is not the longest root");
        check(sign_of(alpha, scale) == sign_of(-f.q, scale),
              "discriminant root sign differs from sign(-q)");
        rep.disc = r;
    }
    if (convergence_check(f, SeriesId::trinomial).converges()) {
        if (m1 - m0 <= tol * std::max(1.0, m1))
            throw refusal_error("smallest root magnitudes too close to classify");
        RootReport r = trinomial_root(f.q, -f.p, 1.0, 3);
        r.classification = RootClass::shortest;
        const double alpha = r.real_value();
        check(std::abs(std::abs(alpha) - m0) <= 1e-8 * std::max(1.0, m0),
              "trinomial root is not the shortest root");
        rep.tri = r;
    }

    if (rep.delta > 0.0) {
        // casus irreducibilis: all roots real, both series converge
        check(rep.disc.has_value() && rep.tri.has_value(),
              "Delta > 0 but a series failed to converge");
        if (rep.tri)
            check(sign_of(rep.tri->real_value(), scale) == sign_of(f.q, scale),
                  "trinomial root sign differs from sign(q)");
        // middle root has the sign of the short root, i.e. of q
        const auto& mid = rep.roots[1];
        check(mid.imag() == 0.0 && sign_of(mid.real(), scale) == sign_of(f.q, scale),
              "middle root sign differs from sign(q)");
    } else {
        // unique real root: same sign as -q; it is the shortest or
        // longest root depending on the sign of p
        const std::complex<double>* real_root = nullptr;
        for (const auto& r : rep.roots)
            if (r.imag() == 0.0) real_root = &r;
        check(real_root != nullptr, "Delta < 0 but no real root identified");
        if (real_root)
            check(sign_of(real_root->real(), scale) == sign_of(-f.q, scale),
                  "unique real root sign differs from sign(-q)");
        if (real_root && f.p > 0.0)
            check(std::abs(*real_root) == m0, "p > 0 but the real root is not the shortest");
        if (real_root && f.p < 0.0)
            check(std::abs(*real_root) == m2, "p < 0 but the real root is not the longest");
    }

    rep.ok = rep.failures.empty();
    return rep;
}

std::vector<RootReport> general_cubic_root(const GeneralCubic<double>& f, SolveMethod method,
                                           double tol, long max_terms) {
    const double p = f.c2 - f.c1 * f.c1 / 3.0;
    const double q = 2.0 * f.c1 * f.c1 * f.c1 / 27.0 - f.c1 * f.c2 / 3.0 + f.c3;
    const double shift = -f.c1 / 3.0;
    RealDepressedCubic g{p, q};

    auto shifted = [&](RootReport rep) {
        if (rep.value) {
            rep.value = *rep.value + shift;
            rep.residual = std::abs(f.eval(rep.value->real()));
            rep.sign = sign_of(rep.value->real(), std::max({1.0, std::abs(f.c2), std::abs(f.c3)}));
        }
        return rep;
    };

    switch (method) {
    case SolveMethod::discriminant:
        return {shifted(discriminant_root(g, tol, max_terms))};
    case SolveMethod::trinomial:
        return {shifted(trinomial_root(q, -p, 1.0, 3, tol, max_terms))};
    case SolveMethod::trig: {
        auto roots = trig_roots(g);
        std::vector<RootReport> out;
        for (auto& r : roots) out.push_back(shifted(r));
        return out;
    }
    case SolveMethod::oracle: {
        auto roots = oracle_roots({f.c1, 0.0}, {f.c2, 0.0}, {f.c3, 0.0});
        std::vector<RootReport> out;
        for (const auto& r : roots) {
            RootReport rep;
            rep.method = RootMethod::oracle;
            rep.value = r;
            rep.converged = true;
            rep.residual = std::abs(eval_monic_cubic({f.c1, 0.0}, {f.c2, 0.0}, {f.c3, 0.0}, r));
            rep.sign = r.imag() == 0.0
                           ? sign_of(r.real(), std::max({1.0, std::abs(f.c2), std::abs(f.c3)}))
                           : SignLabel::zero;
            out.push_back(rep);
        }
        return out;
    }
    case SolveMethod::auto_pick: {
        if (g.p != 0.0 && convergence_check(g, SeriesId::discriminant).converges())
            return {shifted(discriminant_root(g, tol, max_terms))};
        if (g.p != 0.0 && convergence_check(g, SeriesId::trinomial).converges())
            return {shifted(trinomial_root(q, -p, 1.0, 3, tol, max_terms))};
        throw refusal_error("neither the discriminant nor the trinomial series converges here");
    }
    }
    throw domain_error("unknown solve method");
}

std::vector<double> discriminant_series_partial_sums(const RealDepressedCubic& f, int count) {
    f.require_finite();
    if (f.p == 0.0) throw domain_error("partial sums need p != 0");
    const double d = -f.discriminant() / (27.0 * f.p * f.p * f.p);
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(count));
    CompensatedSum sum;
    double term = 1.0;
    for (int n = 0; n < count; ++n) {
        sum.add(term);
        sums.push_back(sum.value());
        const double dn = static_cast<double>(n);
        term *= 3.0 * (3.0 * dn + 2.0) * (3.0 * dn + 1.0) /
                (2.0 * (2.0 * dn + 1.0) * (dn + 1.0)) * d;
    }
    return sums;
}

} // namespace discroot
