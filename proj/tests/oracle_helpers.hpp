#pragma once

// Test-side oracles, kept independent of the library code paths they
// check.  Everything here is deliberately the dumbest correct method.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "discroot/bigint.hpp"

namespace oracle {

// Plain factorial-ratio binomial, independent of mpz_bin_uiui.
inline discroot::BigInt binom_factorial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    return discroot::factorial(n) / (discroot::factorial(k) * discroot::factorial(n - k));
}

// Brute-force Cauchy product of two coefficient lists.
template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, std::size_t upto) {
    std::vector<T> c(upto + 1, T(0));
    for (std::size_t i = 0; i < a.size() && i <= upto; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= upto; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// Adaptive Simpson quadrature to an absolute tolerance.
inline double simpson_segment(const std::function<double(double)>& f, double a, double b,
                              double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson_segment(f, a, m, fa, flm, fm);
    double right = simpson_segment(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson_segment(f, a, b, fa, fm, fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Durand-Kerner simultaneous root iteration for a monic complex
// polynomial given by coefficients c[0..n-1] of t^0..t^{n-1} (leading
// coefficient 1 implied).
inline std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& c) {
    using C = std::complex<double>;
    const std::size_t n = c.size();
    auto eval = [&](C x) {
        C acc(1.0, 0.0);
        for (std::size_t i = n; i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    std::vector<C> z(n);
    C seed(0.4, 0.9);
    C w(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = w;
        w *= seed;
    }
    for (int it = 0; it < 500; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            C num = eval(z[i]);
            C den(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            C step = num / den;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

} // namespace oracle
