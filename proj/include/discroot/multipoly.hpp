#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "discroot/bigint.hpp"
#include "discroot/errors.hpp"

namespace discroot {

/// Shared, immutable list of indeterminate names.  Polynomials over the
/// same variable set share one instance; equality of sets is by content
/// so independently constructed rings with the same names interoperate.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw domain_error("variable set must be non-empty");
    }
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using Monomial = std::vector<unsigned>;

/// How to take an exact coefficient into the evaluation ring T.
template <class T, class K>
struct ScalarCast;

template <>
struct ScalarCast<Rational, Rational> {
    static Rational cast(const Rational& c) { return c; }
};
template <>
struct ScalarCast<double, Rational> {
    static double cast(const Rational& c) { return c.get_d(); }
};
template <>
struct ScalarCast<std::complex<double>, Rational> {
    static std::complex<double> cast(const Rational& c) { return {c.get_d(), 0.0}; }
};

/// Graded lexicographic order, first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        // same total degree: lexicographic, var 0 strongest
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Sparse multivariate polynomial over an exact field K (Rational or
/// PrimeFieldElement).  No zero coefficients are stored; the terms map
/// is kept in grlex order so the leading term is terms().rbegin().
template <class K>
class MultiPoly {
public:
    using Terms = std::map<Monomial, K, GrlexLess>;

    MultiPoly(std::shared_ptr<const VarSet> vars, K scalar_zero)
        : vars_(std::move(vars)), zero_(zero_like(scalar_zero)) {}

    static MultiPoly constant(std::shared_ptr<const VarSet> vars, const K& value) {
        MultiPoly p(vars, value);
        if (!is_zero(value)) p.terms_.emplace(Monomial(p.nvars(), 0), value);
        return p;
    }

    static MultiPoly variable(std::shared_ptr<const VarSet> vars, std::size_t index, const K& proto) {
        if (index >= vars->size()) throw domain_error("variable index out of range");
        MultiPoly p(vars, proto);
        Monomial m(p.nvars(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), one_like(proto));
        return p;
    }

    std::size_t nvars() const { return vars_->size(); }
    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const K& scalar_zero() const { return zero_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }

    K constant_value() const {
        if (terms_.empty()) return zero_;
        auto it = terms_.find(Monomial(nvars(), 0));
        return it == terms_.end() ? zero_ : it->second;
    }

    static unsigned total_degree(const Monomial& m) {
        unsigned d = 0;
        for (unsigned e : m) d += e;
        return d;
    }

    int degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(total_degree(terms_.rbegin()->first));
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw domain_error("leading monomial of 0");
        return terms_.rbegin()->first;
    }
    const K& leading_coefficient() const {
        if (terms_.empty()) throw domain_error("leading coefficient of 0");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return *a.vars_ == *b.vars_ && same_ring(a.zero_, b.zero_) && a.terms_ == b.terms_;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_compatible(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_compatible(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, b.zero_ - c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.vars_, a.zero_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, a.zero_ - c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_compatible(a, b);
        MultiPoly r(a.vars_, a.zero_);
        Monomial m(a.nvars(), 0);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    MultiPoly scaled(const K& s) const {
        MultiPoly r(vars_, zero_);
        if (is_zero(s)) return r;
        for (const auto& [m, c] : terms_) {
            K v = c * s;
            if (!is_zero(v)) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly result = constant(vars_, one_like(zero_));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            if (e >>= 1) base = base * base;
        }
        return result;
    }

    /// Division with remainder by a single divisor under grlex; because a
    /// one-element set is a Groebner basis of the ideal it generates, the
    /// remainder is canonical and vanishes exactly when `d` divides us.
    std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& d) const {
        check_compatible(*this, d);
        if (d.is_zero_poly()) throw domain_error("division by zero polynomial");
        MultiPoly q(vars_, zero_), r(vars_, zero_);
        MultiPoly work = *this;
        const Monomial& dm = d.leading_monomial();
        const K dlc_inv = invert(d.leading_coefficient());
        Monomial ratio(nvars(), 0);
        while (!work.terms_.empty()) {
            auto lead = std::prev(work.terms_.end());
            bool divisible = true;
            for (std::size_t i = 0; i < ratio.size(); ++i) {
                if (lead->first[i] < dm[i]) {
                    divisible = false;
                    break;
                }
                ratio[i] = lead->first[i] - dm[i];
            }
            if (!divisible) {
                r.add_term(lead->first, lead->second);
                work.terms_.erase(lead);
                continue;
            }
            K coef = lead->second * dlc_inv;
            q.add_term(ratio, coef);
            // work -= coef * ratio * d
            Monomial m(nvars(), 0);
            for (const auto& [md, cd] : d.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = md[i] + ratio[i];
                work.add_term(m, zero_ - coef * cd);
            }
        }
        return {std::move(q), std::move(r)};
    }

    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero_poly()) return std::nullopt;
        return q;
    }

    /// Canonical representative of this polynomial modulo (d).
    MultiPoly reduced_mod(const MultiPoly& d) const { return divmod(d).second; }

    /// Substitute values for the variables; T needs +, *, and a zero.
    template <class T>
    T eval(const std::vector<T>& point, const T& zero) const {
        if (point.size() != nvars()) throw domain_error("evaluation point arity mismatch");
        T acc = zero;
        for (const auto& [m, c] : terms_) {
            T term = ScalarCast<T, K>::cast(c);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // leading term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = to_string(it->second);
            bool negative = !c.empty() && c[0] == '-';
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (negative) c = c.substr(1);
            std::string mono = monomial_str(it->first);
            if (mono.empty()) {
                os << c;
            } else if (c == "1") {
                os << mono;
            } else {
                os << c << "*" << mono;
            }
        }
        return os.str();
    }

private:
    static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
        if (!(*a.vars_ == *b.vars_) || !same_ring(a.zero_, b.zero_))
            throw ring_mismatch_error("polynomials over different rings");
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << vars_->name(i);
            if (m[i] > 1) os << "^" << m[i];
        }
        return os.str();
    }

    std::shared_ptr<const VarSet> vars_;
    K zero_;
    Terms terms_;
};

// --- gcd machinery ------------------------------------------------------
//
// Recursive content / primitive-part gcd with a primitive PRS, treating
// the polynomial as univariate in its first effective variable with
// coefficients in the remaining ones.  Fields only; results are
// normalized to leading coefficient 1.

namespace poly_detail {

template <class K>
MultiPoly<K> coeff_of_power(const MultiPoly<K>& f, std::size_t var, unsigned e) {
    MultiPoly<K> out(f.vars(), f.scalar_zero());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] != e) continue;
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(mm, c);
    }
    return out;
}

template <class K>
MultiPoly<K> times_power(const MultiPoly<K>& f, std::size_t var, unsigned e) {
    MultiPoly<K> out(f.vars(), f.scalar_zero());
    for (const auto& [m, c] : f.terms()) {
        Monomial mm = m;
        mm[var] += e;
        out.add_term(mm, c);
    }
    return out;
}

template <class K>
MultiPoly<K> gcd_rec(MultiPoly<K> f, MultiPoly<K> g, std::size_t var);

// gcd of the univariate-in-var coefficient list (the content).
template <class K>
MultiPoly<K> content_in(const MultiPoly<K>& f, std::size_t var) {
    MultiPoly<K> c(f.vars(), f.scalar_zero());
    int d = f.degree_in(var);
    for (int e = 0; e <= d; ++e) {
        MultiPoly<K> ce = coeff_of_power(f, var, static_cast<unsigned>(e));
        if (ce.is_zero_poly()) continue;
        c = c.is_zero_poly() ? ce : gcd_rec(c, ce, var + 1);
        if (c.is_constant()) break;
    }
    return c;
}

// pseudo-remainder of f by g with respect to var (both nonzero,
// deg_var(f) >= deg_var(g) not required).
template <class K>
MultiPoly<K> pseudo_rem(MultiPoly<K> f, const MultiPoly<K>& g, std::size_t var) {
    const int dg = g.degree_in(var);
    const MultiPoly<K> lc_g = coeff_of_power(g, var, static_cast<unsigned>(dg));
    int df = f.degree_in(var);
    while (!f.is_zero_poly() && (df = f.degree_in(var)) >= dg) {
        MultiPoly<K> lc_f = coeff_of_power(f, var, static_cast<unsigned>(df));
        // f := lc_g * f - lc_f * x^(df-dg) * g
        f = f * lc_g - times_power(lc_f * g, var, static_cast<unsigned>(df - dg));
    }
    return f;
}

template <class K>
MultiPoly<K> monic_normalized(const MultiPoly<K>& f) {
    if (f.is_zero_poly()) return f;
    return f.scaled(invert(f.leading_coefficient()));
}

template <class K>
MultiPoly<K> gcd_rec(MultiPoly<K> f, MultiPoly<K> g, std::size_t var) {
    if (f.is_zero_poly()) return monic_normalized(g);
    if (g.is_zero_poly()) return monic_normalized(f);
    if (var >= f.nvars()) return MultiPoly<K>::constant(f.vars(), one_like(f.scalar_zero()));
    if (f.degree_in(var) < 0 && g.degree_in(var) < 0) {
        // neither involves this variable
        return gcd_rec(std::move(f), std::move(g), var + 1);
    }

    MultiPoly<K> cf = content_in(f, var);
    MultiPoly<K> cg = content_in(g, var);
    MultiPoly<K> cont = gcd_rec(cf, cg, var + 1);
    MultiPoly<K> pf = *f.divide_exact(cf);
    MultiPoly<K> pg = *g.divide_exact(cg);

    // primitive PRS in var
    if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);
    while (!pg.is_zero_poly() && pg.degree_in(var) > 0) {
        MultiPoly<K> r = pseudo_rem(pf, pg, var);
        pf = std::move(pg);
        if (r.is_zero_poly()) {
            pg = r;
            break;
        }
        pg = *r.divide_exact(content_in(r, var));
    }
    if (!pg.is_zero_poly()) {
        // a nonzero remainder of degree 0 in var means the primitive
        // parts are coprime in var
        return monic_normalized(cont);
    }
    MultiPoly<K> pp = *pf.divide_exact(content_in(pf, var));
    return monic_normalized(cont * pp);
}

// Heuristic gcd for rational coefficients (integer evaluation, digit
// reconstruction, trial-division verification).  Orders of magnitude
// faster than the PRS on the fraction towers the pi-adic layer builds;
// the PRS remains as the fallback and for prime-field coefficients.

using QPolyDetail = MultiPoly<Rational>;

inline BigInt max_abs_numerator(const QPolyDetail& f) {
    BigInt m = 0;
    for (const auto& [mono, c] : f.terms()) {
        BigInt a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

// scale to integer coefficients, primitive, positive leading coefficient
inline QPolyDetail to_integer_primitive(const QPolyDetail& f) {
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& [mono, c] : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return f;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    QPolyDetail out = f.scaled(scale);
    if (out.leading_coefficient() < 0) out = out.scaled(Rational(-1));
    return out;
}

inline QPolyDetail eval_variable_at(const QPolyDetail& f, std::size_t var, const BigInt& xi) {
    QPolyDetail out(f.vars(), Rational(0));
    std::vector<BigInt> powers{1};
    for (const auto& [mono, c] : f.terms()) {
        while (powers.size() <= mono[var]) powers.push_back(powers.back() * xi);
        Monomial m = mono;
        m[var] = 0;
        out.add_term(m, c * Rational(powers[mono[var]]));
    }
    return out;
}

// balanced residue of every integer coefficient modulo xi
inline QPolyDetail smod_coefficients(const QPolyDetail& f, const BigInt& xi) {
    QPolyDetail out(f.vars(), Rational(0));
    const BigInt half = xi / 2;
    for (const auto& [mono, c] : f.terms()) {
        BigInt r;
        mpz_mod(r.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t()); // r in [0, xi)
        if (r > half) r -= xi;
        if (r != 0) out.add_term(mono, Rational(r));
    }
    return out;
}

// division in Z[vars]: remainder must vanish and the quotient must have
// integer coefficients (field division alone cannot see integer content,
// which at inner recursion levels carries the evaluated variables)
inline bool divides_over_integers(const QPolyDetail& F, const QPolyDetail& H) {
    auto q = F.divide_exact(H);
    if (!q) return false;
    for (const auto& [mono, c] : q->terms())
        if (c.get_den() != 1) return false;
    return true;
}

inline std::optional<QPolyDetail> gcd_heuristic_rec(const QPolyDetail& F, const QPolyDetail& G,
                                                    int depth) {
    if (depth > 12) return std::nullopt;
    if (F.is_zero_poly()) return G;
    if (G.is_zero_poly()) return F;
    if (F.is_constant() || G.is_constant()) {
        // gcd with a constant is the gcd of all integer coefficients
        BigInt contentF = 0, contentG = 0, g;
        for (const auto& [mono, c] : F.terms())
            mpz_gcd(contentF.get_mpz_t(), contentF.get_mpz_t(), c.get_num().get_mpz_t());
        for (const auto& [mono, c] : G.terms())
            mpz_gcd(contentG.get_mpz_t(), contentG.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), contentF.get_mpz_t(), contentG.get_mpz_t());
        if (g == 0) g = 1;
        return QPolyDetail::constant(F.vars(), Rational(g));
    }

    // a variable both polynomials actually use
    std::size_t var = F.nvars();
    for (std::size_t v = 0; v < F.nvars(); ++v)
        if (F.degree_in(v) > 0 && G.degree_in(v) > 0) {
            var = v;
            break;
        }
    if (var == F.nvars()) {
        // no shared variable: only a constant can divide both
        BigInt cf = 0, cg = 0, g;
        for (const auto& [mono, c] : F.terms())
            mpz_gcd(cf.get_mpz_t(), cf.get_mpz_t(), c.get_num().get_mpz_t());
        for (const auto& [mono, c] : G.terms())
            mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
        if (g == 0) g = 1;
        return QPolyDetail::constant(F.vars(), Rational(g));
    }

    BigInt xi = 2 * std::max(max_abs_numerator(F), max_abs_numerator(G)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        QPolyDetail f = eval_variable_at(F, var, xi);
        QPolyDetail g = eval_variable_at(G, var, xi);
        auto h = gcd_heuristic_rec(f, g, depth + 1);
        if (h) {
            // lift h back to a polynomial in `var` via balanced base-xi digits
            QPolyDetail H(F.vars(), Rational(0));
            QPolyDetail e = *h;
            for (unsigned i = 0; !e.is_zero_poly() && i < 4000; ++i) {
                QPolyDetail digit = smod_coefficients(e, xi);
                for (const auto& [mono, c] : digit.terms()) {
                    Monomial m = mono;
                    m[var] += i;
                    H.add_term(m, c);
                }
                e = e - digit;
                QPolyDetail next(F.vars(), Rational(0));
                for (const auto& [mono, c] : e.terms()) {
                    BigInt q;
                    mpz_divexact(q.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
                    if (q != 0) next.add_term(mono, Rational(q));
                }
                e = std::move(next);
            }
            // keep H's integer content: it encodes the gcd's dependence
            // on the variables evaluated further out
            if (!H.is_zero_poly() && divides_over_integers(F, H) && divides_over_integers(G, H))
                return H;
        }
        xi = xi * 73794 / 27011 + 37;
    }
    return std::nullopt;
}

} // namespace poly_detail

template <class K>
MultiPoly<K> gcd(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    // universal fast paths
    if (a.is_zero_poly()) return poly_detail::monic_normalized(b);
    if (b.is_zero_poly()) return poly_detail::monic_normalized(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly<K>::constant(a.vars(), one_like(a.scalar_zero()));
    if (b.divide_exact(a).has_value()) return poly_detail::monic_normalized(a);
    if (a.divide_exact(b).has_value()) return poly_detail::monic_normalized(b);

    if constexpr (std::is_same_v<K, Rational>) {
        MultiPoly<Rational> fa = poly_detail::to_integer_primitive(a);
        MultiPoly<Rational> fb = poly_detail::to_integer_primitive(b);
        auto h = poly_detail::gcd_heuristic_rec(fa, fb, 0);
        if (h) return poly_detail::monic_normalized(*h);
    }
    return poly_detail::gcd_rec(a, b, 0);
}

template <class K>
bool same_ring(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    return *a.vars() == *b.vars() && same_ring(a.scalar_zero(), b.scalar_zero());
}
template <class K>
unsigned characteristic(const MultiPoly<K>& a) {
    return characteristic(a.scalar_zero());
}
template <class K>
std::string to_string(const MultiPoly<K>& a) {
    return a.str();
}

} // namespace discroot
