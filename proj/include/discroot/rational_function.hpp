#pragma once

#include <optional>
#include <string>
#include <utility>

#include "discroot/multipoly.hpp"

namespace discroot {

/// Valuation value: a finite integer or +infinity (for 0).
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(long value) { return {false, value}; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    bool at_least(long bound) const { return infinite || v >= bound; }
    std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

/// Exact multiplicity of `pi` in nonzero `f` by trial division.
template <class K>
long pi_multiplicity(MultiPoly<K> f, const MultiPoly<K>& pi) {
    long v = 0;
    while (true) {
        auto q = f.divide_exact(pi);
        if (!q) return v;
        f = std::move(*q);
        ++v;
    }
}

/// Quotient of multivariate polynomials over a field, kept reduced
/// (gcd 1 for up to three indeterminates) with a monic denominator under
/// grlex, so equal elements have identical representations.
template <class K>
class RationalFunction {
public:
    explicit RationalFunction(MultiPoly<K> num)
        : num_(std::move(num)),
          den_(MultiPoly<K>::constant(num_.vars(), one_like(num_.scalar_zero()))) {}

    RationalFunction(MultiPoly<K> num, MultiPoly<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero_poly()) throw domain_error("rational function with zero denominator");
        normalize();
    }

    static RationalFunction constant(std::shared_ptr<const VarSet> vars, const K& value) {
        return RationalFunction(MultiPoly<K>::constant(std::move(vars), value));
    }

    static RationalFunction variable(std::shared_ptr<const VarSet> vars, std::size_t index,
                                     const K& proto) {
        return RationalFunction(MultiPoly<K>::variable(std::move(vars), index, proto));
    }

    const MultiPoly<K>& num() const { return num_; }
    const MultiPoly<K>& den() const { return den_; }
    bool is_zero_fn() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero_fn()) return b;
        if (b.is_zero_fn()) return a;
        MultiPoly<K> g = gcd(a.den_, b.den_);
        MultiPoly<K> bq = *b.den_.divide_exact(g);
        MultiPoly<K> aq = *a.den_.divide_exact(g);
        return RationalFunction(a.num_ * bq + b.num_ * aq, a.den_ * bq);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero_fn()) return a;
        if (b.is_zero_fn()) return b;
        // cross-cancel before multiplying to keep operands small
        MultiPoly<K> g1 = gcd(a.num_, b.den_);
        MultiPoly<K> g2 = gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
        r.den_ = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
        r.scalar_normalize();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction inverse() const {
        if (is_zero_fn()) throw domain_error("inverse of the zero rational function");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.scalar_normalize();
        return r;
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r = constant(num_.vars(), one_like(num_.scalar_zero()));
        RationalFunction b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    template <class T>
    T eval(const std::vector<T>& point, const T& zero) const {
        T n = num_.eval(point, zero);
        T d = den_.eval(point, zero);
        return n / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
        std::string d = den_.terms().size() > 1 ? "(" + den_.str() + ")" : den_.str();
        return n + "/" + d;
    }

private:
    RationalFunction() : num_(nullptr, K{}), den_(nullptr, K{}) {}

    void scalar_normalize() {
        if (num_.is_zero_poly()) {
            den_ = MultiPoly<K>::constant(den_.vars(), one_like(den_.scalar_zero()));
            return;
        }
        const K lc = den_.leading_coefficient();
        K inv = invert(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    void normalize() {
        if (num_.is_zero_poly()) {
            den_ = MultiPoly<K>::constant(den_.vars(), one_like(den_.scalar_zero()));
            return;
        }
        // full gcd reduction is guaranteed for <= 3 indeterminates;
        // valuations only need pi-power cancellation, done at that layer
        if (num_.nvars() <= 3) {
            MultiPoly<K> g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *num_.divide_exact(g);
                den_ = *den_.divide_exact(g);
            }
        }
        scalar_normalize();
    }

    MultiPoly<K> num_;
    MultiPoly<K> den_;
};

/// v_pi on the fraction field: v(num) - v(den), +infinity at 0.
template <class K>
Valuation pi_adic_valuation(const RationalFunction<K>& x, const MultiPoly<K>& pi) {
    if (pi.is_zero_poly() || pi.is_constant())
        throw domain_error("pi must be a non-constant polynomial");
    if (x.is_zero_fn()) return Valuation::inf();
    return Valuation::of(pi_multiplicity(x.num(), pi) - pi_multiplicity(x.den(), pi));
}

template <class K>
bool same_ring(const RationalFunction<K>& a, const RationalFunction<K>& b) {
    return same_ring(a.num(), b.num());
}
template <class K>
RationalFunction<K> zero_like(const RationalFunction<K>& a) {
    return RationalFunction<K>::constant(a.num().vars(), zero_like(a.num().scalar_zero()));
}
template <class K>
RationalFunction<K> one_like(const RationalFunction<K>& a) {
    return RationalFunction<K>::constant(a.num().vars(), one_like(a.num().scalar_zero()));
}
template <class K>
RationalFunction<K> from_integer_like(const RationalFunction<K>& a, const BigInt& n) {
    return RationalFunction<K>::constant(a.num().vars(),
                                         from_integer_like(a.num().scalar_zero(), n));
}
template <class K>
bool is_zero(const RationalFunction<K>& a) {
    return a.is_zero_fn();
}
template <class K>
RationalFunction<K> invert(const RationalFunction<K>& a) {
    return a.inverse();
}
template <class K>
unsigned characteristic(const RationalFunction<K>& a) {
    return characteristic(a.num().scalar_zero());
}
template <class K>
std::string to_string(const RationalFunction<K>& a) {
    return a.str();
}

} // namespace discroot
