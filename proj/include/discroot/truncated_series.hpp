#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "discroot/errors.hpp"

namespace discroot {

/// Power series in one formal variable, truncated at an inclusive order:
/// coefficients 0..order are exact, everything above is unknown.
///
/// Binary operations require both operands to live over the same ring
/// (same modulus / variable set) and return a result truncated at the
/// smaller of the two orders, so precision degrades explicitly rather
/// than erroring.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw domain_error("series needs at least the constant term");
    }

    static TruncatedSeries constant(const R& value, int order) {
        std::vector<R> c(static_cast<std::size_t>(order) + 1, zero_like(value));
        c[0] = value;
        return TruncatedSeries(std::move(c));
    }

    /// The series z itself (0 + 1*z), truncated at `order` >= 1.
    static TruncatedSeries variable(const R& proto, int order) {
        if (order < 1) throw domain_error("variable series needs order >= 1");
        std::vector<R> c(static_cast<std::size_t>(order) + 1, zero_like(proto));
        c[1] = one_like(proto);
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    R& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<R>& coefficients() const { return c_; }

    TruncatedSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        std::vector<R> c(c_.begin(), c_.begin() + new_order + 1);
        return TruncatedSeries(std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = check_and_min_order(a, b);
        std::vector<R> c;
        c.reserve(n + 1);
        for (int k = 0; k <= n; ++k) c.push_back(a[k] + b[k]);
        return TruncatedSeries(std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = check_and_min_order(a, b);
        std::vector<R> c;
        c.reserve(n + 1);
        for (int k = 0; k <= n; ++k) c.push_back(a[k] - b[k]);
        return TruncatedSeries(std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        std::vector<R> c;
        c.reserve(a.c_.size());
        for (const R& x : a.c_) c.push_back(zero_like(x) - x);
        return TruncatedSeries(std::move(c));
    }

    /// Cauchy product, truncated at the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = check_and_min_order(a, b);
        std::vector<R> c(static_cast<std::size_t>(n) + 1, zero_like(a[0]));
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (is_zero(b[j])) continue;
                c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
        return TruncatedSeries(std::move(c));
    }

    TruncatedSeries scaled(const R& s) const {
        if (!same_ring(s, c_[0])) throw ring_mismatch_error("scalar from a different ring");
        std::vector<R> c;
        c.reserve(c_.size());
        for (const R& x : c_) c.push_back(x * s);
        return TruncatedSeries(std::move(c));
    }

    /// Multiplicative inverse; needs an invertible constant term.
    TruncatedSeries inverse() const {
        const int n = order();
        R a0inv = invert(c_[0]);
        std::vector<R> b(static_cast<std::size_t>(n) + 1, zero_like(c_[0]));
        b[0] = a0inv;
        for (int k = 1; k <= n; ++k) {
            R acc = zero_like(c_[0]);
            for (int i = 1; i <= k; ++i) acc += c_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
            b[static_cast<std::size_t>(k)] = (zero_like(acc) - acc) * a0inv;
        }
        return TruncatedSeries(std::move(b));
    }

    TruncatedSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        TruncatedSeries result = constant(one_like(c_[0]), order());
        TruncatedSeries base = *this;
        long k = e;
        while (k > 0) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    /// Shift by one power of the variable: z * this, truncated at the
    /// same order (top coefficient falls off).
    TruncatedSeries shifted_up() const {
        std::vector<R> c(c_.size(), zero_like(c_[0]));
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) c[k + 1] = c_[k];
        return TruncatedSeries(std::move(c));
    }

private:
    static int check_and_min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (!same_ring(a.c_[0], b.c_[0]))
            throw ring_mismatch_error("series over different rings");
        return a.order() < b.order() ? a.order() : b.order();
    }

    std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return a + b;
}
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return a * b;
}
template <class R>
TruncatedSeries<R> series_scale(const TruncatedSeries<R>& a, const R& s) {
    return a.scaled(s);
}
template <class R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, long e) {
    return a.pow(e);
}

} // namespace discroot
