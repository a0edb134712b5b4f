#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "discroot/cubic.hpp"
#include "discroot/named_series.hpp"
#include "discroot/rational_function.hpp"
#include "discroot/truncated_series.hpp"

namespace discroot {

struct LiftConfig {
    int truncation_order = 8;  // N: work modulo pi^(N+1)
    unsigned base_characteristic = 0;

    void validate() const {
        if (truncation_order < 1) throw domain_error("truncation order must be >= 1");
    }
};

/// Element of the closed unit disk A of the pi-adic completion, stored
/// as sum a_k pi^k for k = 0..N with v_pi(a_k) = 0 for every nonzero
/// coefficient (the normal form: pi-multiples are carried upward into
/// higher terms, anything past N falls off).
///
/// The normal form is idempotent but the decomposition of an element of
/// A into such coefficients is not unique (e.g. p^2/q and -27q/(4p)
/// agree mod Delta for the depressed cubic), so semantic equality is
/// `congruent_to`, which decides a =~ b mod pi^(N+1) exactly.
template <class K>
class DiscAdicElement {
public:
    using F = RationalFunction<K>;
    using PiPtr = std::shared_ptr<const MultiPoly<K>>;

    DiscAdicElement(PiPtr pi, TruncatedSeries<F> terms)
        : pi_(std::move(pi)), terms_(std::move(terms)) {
        if (!pi_ || pi_->is_zero_poly() || pi_->is_constant())
            throw domain_error("pi must be a non-constant polynomial");
        normalize();
    }

    static DiscAdicElement constant(PiPtr pi, const F& value, int order) {
        return DiscAdicElement(std::move(pi), TruncatedSeries<F>::constant(value, order));
    }

    static DiscAdicElement zero(PiPtr pi, const F& proto, int order) {
        return constant(std::move(pi), zero_like(proto), order);
    }

    int order() const { return terms_.order(); }
    const F& coeff(int k) const { return terms_[k]; }
    const TruncatedSeries<F>& terms() const { return terms_; }
    const PiPtr& pi_ptr() const { return pi_; }
    const MultiPoly<K>& pi() const { return *pi_; }

    bool is_zero_element() const {
        for (int k = 0; k <= order(); ++k)
            if (!is_zero(terms_[k])) return false;
        return true;
    }

    /// Index of the first nonzero coefficient; in normal form this is
    /// exactly v_pi of the element when it is < N+1.
    Valuation valuation_lower_bound() const {
        for (int k = 0; k <= order(); ++k)
            if (!is_zero(terms_[k])) return Valuation::of(k);
        return Valuation::of(order() + 1); // means "> N", not exact
    }

    /// The represented element as a single field value sum a_k pi^k.
    F as_field_element() const {
        F acc = zero_like(terms_[0]);
        F pival(*pi_);
        F power = one_like(acc);
        for (int k = 0; k <= order(); ++k) {
            if (!is_zero(terms_[k])) acc += terms_[k] * power;
            if (k < order()) power *= pival;
        }
        return acc;
    }

    friend bool operator==(const DiscAdicElement& a, const DiscAdicElement& b) {
        return *a.pi_ == *b.pi_ && a.terms_ == b.terms_;
    }

    /// Exact congruence mod pi^(N+1) at the common order: levelwise
    /// differences must keep absorbing into higher powers of pi.
    bool congruent_to(const DiscAdicElement& b) const {
        check_compatible(*this, b);
        const int n = std::min(order(), b.order());
        F carry = zero_like(terms_[0]);
        F pival(*pi_);
        for (int k = 0; k <= n; ++k) {
            F e = terms_[k] - b.terms_[k] + carry;
            if (is_zero(e)) {
                carry = zero_like(carry);
                continue;
            }
            Valuation v = pi_adic_valuation(e, *pi_);
            if (!v.at_least(1)) return false;
            carry = e / pival;
        }
        return true;
    }

    friend DiscAdicElement operator+(const DiscAdicElement& a, const DiscAdicElement& b) {
        check_compatible(a, b);
        return DiscAdicElement(a.pi_, a.terms_ + b.terms_);
    }
    friend DiscAdicElement operator-(const DiscAdicElement& a, const DiscAdicElement& b) {
        check_compatible(a, b);
        return DiscAdicElement(a.pi_, a.terms_ - b.terms_);
    }
    friend DiscAdicElement operator-(const DiscAdicElement& a) {
        return DiscAdicElement(a.pi_, -a.terms_);
    }
    friend DiscAdicElement operator*(const DiscAdicElement& a, const DiscAdicElement& b) {
        check_compatible(a, b);
        return DiscAdicElement(a.pi_, a.terms_ * b.terms_);
    }

    DiscAdicElement scaled(const F& s) const {
        return DiscAdicElement(pi_, terms_.scaled(s));
    }

    /// Inverse in A: requires a unit (nonzero constant coefficient after
    /// normalization, i.e. v_pi = 0).
    DiscAdicElement inverse() const {
        if (is_zero(terms_[0]))
            throw domain_error("inverse of a non-unit in the pi-adic disk");
        return DiscAdicElement(pi_, terms_.inverse());
    }

    friend DiscAdicElement operator/(const DiscAdicElement& a, const DiscAdicElement& b) {
        return a * b.inverse();
    }

    DiscAdicElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        DiscAdicElement r = constant(pi_, one_like(terms_[0]), order());
        DiscAdicElement b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    DiscAdicElement truncated(int new_order) const {
        return DiscAdicElement(pi_, terms_.truncated(new_order));
    }

    /// "a0 + a1*pi + ... + aN*pi^N [pi = <poly>]"
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            if (is_zero(terms_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << terms_[k].str() << ")";
            if (k >= 1) os << "*pi";
            if (k >= 2) os << "^" << k;
        }
        if (first) os << "0";
        os << " [pi = " << pi_->str() << "]";
        return os.str();
    }

private:
    static void check_compatible(const DiscAdicElement& a, const DiscAdicElement& b) {
        if (!(*a.pi_ == *b.pi_))
            throw ring_mismatch_error("pi-adic elements over different pi");
    }

    // Carry pi-multiples upward so every surviving coefficient is a
    // pi-unit; a single ascending pass suffices because mass only moves
    // to strictly higher indices.
    void normalize() {
        const int n = order();
        F pival(*pi_);
        for (int k = 0; k <= n; ++k) {
            F& c = terms_.coeff(k);
            if (is_zero(c)) continue;
            Valuation v = pi_adic_valuation(c, *pi_);
            if (v.v < 0)
                throw verification_error("coefficient outside the closed unit disk");
            if (v.v == 0) continue;
            long shift = v.v;
            F reduced = c / pival.pow(shift);
            c = zero_like(c);
            if (k + shift <= n) terms_.coeff(k + static_cast<int>(shift)) += reduced;
        }
    }

    PiPtr pi_;
    TruncatedSeries<F> terms_;
};

template <class K>
bool same_ring(const DiscAdicElement<K>& a, const DiscAdicElement<K>& b) {
    return a.pi() == b.pi();
}
template <class K>
DiscAdicElement<K> zero_like(const DiscAdicElement<K>& a) {
    return DiscAdicElement<K>::zero(a.pi_ptr(), a.coeff(0), a.order());
}
template <class K>
DiscAdicElement<K> one_like(const DiscAdicElement<K>& a) {
    return DiscAdicElement<K>::constant(a.pi_ptr(), one_like(a.coeff(0)), a.order());
}
template <class K>
DiscAdicElement<K> from_integer_like(const DiscAdicElement<K>& a, const BigInt& n) {
    return DiscAdicElement<K>::constant(a.pi_ptr(), from_integer_like(a.coeff(0), n), a.order());
}
template <class K>
bool is_zero(const DiscAdicElement<K>& a) {
    return a.is_zero_element();
}
template <class K>
DiscAdicElement<K> invert(const DiscAdicElement<K>& a) {
    return a.inverse();
}
template <class K>
unsigned characteristic(const DiscAdicElement<K>& a) {
    return characteristic(a.coeff(0));
}
template <class K>
std::string to_string(const DiscAdicElement<K>& a) {
    return a.str();
}

// --- substitution and verification --------------------------------------

template <class K>
DiscAdicElement<K> eval_cubic(const GeneralCubic<RationalFunction<K>>& f,
                              const DiscAdicElement<K>& a) {
    auto embed = [&](const RationalFunction<K>& x) {
        return DiscAdicElement<K>::constant(a.pi_ptr(), x, a.order());
    };
    return ((a + embed(f.c1)) * a + embed(f.c2)) * a + embed(f.c3);
}

template <class K>
DiscAdicElement<K> eval_cubic_derivative(const GeneralCubic<RationalFunction<K>>& f,
                                         const DiscAdicElement<K>& a) {
    auto embed = [&](const RationalFunction<K>& x) {
        return DiscAdicElement<K>::constant(a.pi_ptr(), x, a.order());
    };
    const auto three = from_integer_like(a, BigInt(3));
    const auto two = from_integer_like(a, BigInt(2));
    return three * a * a + two * embed(f.c1) * a + embed(f.c2);
}

struct ValuationReport {
    enum class Kind { exact, at_least, infinite } kind = Kind::at_least;
    long v = 0;

    bool passes(int truncation_order) const {
        return kind == Kind::infinite || v > truncation_order ||
               (kind == Kind::at_least && v >= truncation_order + 1);
    }
    std::string str() const {
        switch (kind) {
        case Kind::infinite: return "inf";
        case Kind::exact: return std::to_string(v);
        case Kind::at_least: return ">=" + std::to_string(v);
        }
        return "?";
    }
};

/// v_pi(f(alpha)) as far as the truncated representation can see.  When
/// the substitution vanishes mod pi^(N+1) and alpha is a plain constant,
/// the check is redone exactly in the field (so an embedded exact root
/// reports infinite valuation).
template <class K>
ValuationReport verify_root(const GeneralCubic<RationalFunction<K>>& f,
                            const DiscAdicElement<K>& alpha) {
    DiscAdicElement<K> value = eval_cubic(f, alpha);
    Valuation lower = value.valuation_lower_bound();
    if (lower.v <= alpha.order()) return {ValuationReport::Kind::exact, lower.v};

    bool constant_alpha = true;
    for (int k = 1; k <= alpha.order(); ++k)
        if (!is_zero(alpha.coeff(k))) {
            constant_alpha = false;
            break;
        }
    if (constant_alpha) {
        RationalFunction<K> exact = f.eval(alpha.coeff(0));
        if (is_zero(exact)) return {ValuationReport::Kind::infinite, 0};
        Valuation v = pi_adic_valuation(exact, alpha.pi());
        return {ValuationReport::Kind::exact, v.v};
    }
    return {ValuationReport::Kind::at_least, static_cast<long>(alpha.order()) + 1};
}

template <class K>
ValuationReport verify_root(const DepressedCubic<RationalFunction<K>>& g,
                            const DiscAdicElement<K>& alpha) {
    return verify_root(g.general(), alpha);
}

// --- root constructions --------------------------------------------------

/// Newton/Hensel lift of a simple residue root: alpha <- alpha -
/// f(alpha)/f'(alpha), quadratically until the update vanishes mod
/// pi^(N+1).  The seed must satisfy v(f(seed)) >= 1 and v(f'(seed)) = 0.
template <class K>
DiscAdicElement<K> hensel_lift_cubic(const GeneralCubic<RationalFunction<K>>& f,
                                     const RationalFunction<K>& seed,
                                     std::shared_ptr<const MultiPoly<K>> pi,
                                     const LiftConfig& cfg) {
    cfg.validate();
    if (characteristic(seed) != cfg.base_characteristic)
        throw ring_mismatch_error("LiftConfig characteristic does not match the coefficient ring");
    const int N = cfg.truncation_order;

    if (!pi_adic_valuation(f.eval(seed), *pi).at_least(1))
        throw hensel_error("seed is not a root of the residue cubic");
    Valuation vd = pi_adic_valuation(f.eval_derivative(seed), *pi);
    if (vd.infinite || vd.v != 0)
        throw hensel_error("seed is not a simple residue root (derivative not a unit)");

    DiscAdicElement<K> alpha = DiscAdicElement<K>::constant(pi, seed, N);
    // correct mod pi after seeding; each step doubles that
    for (int known = 1; known <= N;) {
        DiscAdicElement<K> fa = eval_cubic(f, alpha);
        if (fa.is_zero_element()) break;
        DiscAdicElement<K> fpa = eval_cubic_derivative(f, alpha);
        alpha = alpha - fa * fpa.inverse();
        known *= 2;
    }

    if (!verify_root(f, alpha).passes(N))
        throw verification_error("Newton lift failed to reach the requested precision");
    return alpha;
}

/// Distinguished root of the depressed cubic as the discriminant series:
/// (3q/p) * sum_n C(3n,n) (-Delta/27p^3)^n, laid out in pi = Delta.
template <class K>
DiscAdicElement<K> discriminant_root_series(const DepressedCubic<RationalFunction<K>>& g,
                                            const LiftConfig& cfg) {
    cfg.validate();
    using F = RationalFunction<K>;
    const unsigned ch = characteristic(g.p);
    if (ch == 2 || ch == 3)
        throw domain_error("discriminant series needs characteristic != 2, 3");
    if (is_zero(g.p)) throw domain_error("discriminant series needs p != 0");
    const int N = cfg.truncation_order;

    F disc = cubic_discriminant(g);
    if (!disc.is_polynomial())
        throw domain_error("discriminant is not polynomial in the base ring");
    auto pi = std::make_shared<const MultiPoly<K>>(disc.num());

    if (is_zero(g.q))
        return DiscAdicElement<K>::zero(pi, g.p, N);

    const F p_inv = g.p.inverse();
    const F three_q_over_p = from_integer_like(g.p, BigInt(3)) * g.q * p_inv;
    const F step = from_integer_like(g.p, BigInt(-27)).inverse() * p_inv.pow(3);

    std::vector<F> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);
    F factor = one_like(g.p);
    for (int n = 0; n <= N; ++n) {
        F c = three_q_over_p *
              from_integer_like(g.p, central_trinomial_coeff(static_cast<unsigned long>(n))) *
              factor;
        coeffs.push_back(std::move(c));
        if (n < N) factor *= step;
    }
    DiscAdicElement<K> alpha(pi, TruncatedSeries<F>(std::move(coeffs)));
    if (!verify_root(g, alpha).passes(N))
        throw verification_error("discriminant series does not solve the cubic at this order");
    return alpha;
}

/// Non-depressed variant: depress, expand, shift the constant term by
/// -c1/3 (characteristic != 2, 3).
template <class K>
DiscAdicElement<K> general_discriminant_root_series(const GeneralCubic<RationalFunction<K>>& f,
                                                    const LiftConfig& cfg) {
    auto dep = depress_cubic(f);
    DiscAdicElement<K> alpha = discriminant_root_series(dep.g, cfg);
    DiscAdicElement<K> shift = DiscAdicElement<K>::constant(alpha.pi_ptr(), dep.shift, alpha.order());
    DiscAdicElement<K> root = alpha + shift;
    if (!verify_root(f, root).passes(cfg.truncation_order))
        throw verification_error("shifted discriminant root does not solve the general cubic");
    return root;
}

/// Characteristic-3 root of the general cubic (c1 != 0):
/// c2/c1 - c1 * B_{3,-1}(Delta/c1^6) in pi = Delta.
template <class K>
DiscAdicElement<K> char3_root_series(const GeneralCubic<RationalFunction<K>>& f,
                                     const LiftConfig& cfg) {
    cfg.validate();
    using F = RationalFunction<K>;
    if (characteristic(f.c1) != 3) throw domain_error("char3_root_series needs characteristic 3");
    if (is_zero(f.c1))
        throw domain_error("characteristic-3 root series needs c1 != 0 "
                           "(the depressed generic cubic has no such root)");
    const int N = cfg.truncation_order;

    F disc = cubic_discriminant(f);
    if (!disc.is_polynomial())
        throw domain_error("discriminant is not polynomial in the base ring");
    auto pi = std::make_shared<const MultiPoly<K>>(disc.num());

    const F c1_inv = f.c1.inverse();
    const F c1_pow6_inv = c1_inv.pow(6);

    std::vector<F> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);
    // order 0: c2/c1 - c1 * A_0 = c2/c1 - c1
    coeffs.push_back(f.c2 * c1_inv - f.c1);
    F factor = c1_pow6_inv;
    for (int m = 1; m <= N; ++m) {
        F am = from_integer_like(f.c1, raney_number(3, -1, static_cast<unsigned long>(m)));
        coeffs.push_back((zero_like(f.c1) - f.c1) * am * factor);
        if (m < N) factor *= c1_pow6_inv;
    }
    DiscAdicElement<K> alpha(pi, TruncatedSeries<F>(std::move(coeffs)));
    if (!verify_root(f, alpha).passes(N))
        throw verification_error("characteristic-3 series does not solve the cubic at this order");
    return alpha;
}

/// Characteristic-2 root of the depressed cubic (p != 0):
/// (q/p) * B_3(Delta/p^3) with Delta = q^2, laid out in pi = q (= delta
/// for the depressed form), so the term for n sits at pi^(2n+1).
template <class K>
DiscAdicElement<K> char2_root_series(const DepressedCubic<RationalFunction<K>>& g,
                                     const LiftConfig& cfg) {
    cfg.validate();
    using F = RationalFunction<K>;
    if (characteristic(g.p) != 2) throw domain_error("char2_root_series needs characteristic 2");
    if (is_zero(g.p)) throw domain_error("characteristic-2 root series needs p != 0");
    if (!g.q.is_polynomial() || g.q.num().is_constant())
        throw domain_error("pi = q must be a non-constant polynomial");
    const int N = cfg.truncation_order;

    auto pi = std::make_shared<const MultiPoly<K>>(g.q.num());
    const F p_inv3 = g.p.inverse().pow(3);

    std::vector<F> coeffs(static_cast<std::size_t>(N) + 1, zero_like(g.p));
    F denom = g.p.inverse();
    for (int n = 0; 2 * n + 1 <= N; ++n) {
        F an = from_integer_like(g.p, fuss_catalan(3, 1, static_cast<unsigned long>(n)));
        coeffs[static_cast<std::size_t>(2 * n + 1)] = an * denom;
        denom *= p_inv3;
    }
    DiscAdicElement<K> alpha(pi, TruncatedSeries<F>(std::move(coeffs)));
    if (!verify_root(g, alpha).passes(N))
        throw verification_error("characteristic-2 series does not solve the cubic at this order");
    return alpha;
}

/// Example-style negative control: over F_3(p, q) with pi = p, the
/// residue of t^3 + pt + q is t^3 + q, and a root in F_3(q) would be a
/// cube root of -q.  Certified impossible because v_q(-q) = 1 is not
/// divisible by 3 (cubes have q-adic valuation divisible by 3).
bool char3_depressed_residue_is_rootless();

} // namespace discroot
