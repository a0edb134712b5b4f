#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discroot/bigint.hpp"
#include "discroot/named_series.hpp"
#include "discroot/prime_field.hpp"
#include "discroot/truncated_series.hpp"

namespace discroot {

/// Runtime selector for the coefficient ring of an identity check.
struct RingId {
    enum class Kind { integers, rationals, prime_field };
    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static RingId integers() { return {Kind::integers, 0}; }
    static RingId rationals() { return {Kind::rationals, 0}; }
    static RingId gf(std::int64_t p) { return {Kind::prime_field, p}; }
    std::string name() const;
    static RingId parse(const std::string& s);
};

/// The closed set of checkable identities.  Parameters ride along for
/// the families (trinomial_shift(n), power_law(n,r)).
struct IdentityId {
    enum class Kind {
        disc_cubic,           // (4 - 27z) s(z)^3 = 1 + 3 s(z)
        trinomial_shift,      // z B_n(z)^n = B_n(z) - 1
        power_law,            // B_n(z)^r = B_{n,r}(z)
        char3_cubic,          // a(z)(1 - a(z))^2 = z, a = 1 - B_{3,-1}
        hypergeometric_match, // [z^n] F(1/3,2/3;1/2;27z/4) = C(3n,n)
    };
    Kind kind = Kind::disc_cubic;
    long n = 3;
    long r = 1;

    std::string name() const;
    static IdentityId parse(const std::string& s);
};

struct IdentityReport {
    std::string identity;
    std::string ring;
    int order = 0;
    bool ok = false;
    int first_mismatch = -1;     // coefficient index, when !ok
    std::string lhs_value;       // mismatching values, rendered
    std::string rhs_value;
};

/// Check one identity coefficientwise through `order` over the ring
/// carried by `proto`; exact arithmetic, so a pass is a proof-at-order.
template <class R>
IdentityReport verify_identity_over(const IdentityId& id, int order, const R& proto);

/// Runtime-ring dispatcher (CLI surface).
IdentityReport verify_identity(const IdentityId& id, int order, const RingId& ring);

/// The default suite: every identity with the parameter sets used by the
/// acceptance gate, at the given order cap.
std::vector<IdentityReport> verify_all_identities(int order);

// --- implementation ----------------------------------------------------

namespace detail {

template <class R>
IdentityReport compare_series(const IdentityId& id, const TruncatedSeries<R>& lhs,
                              const TruncatedSeries<R>& rhs) {
    IdentityReport rep;
    rep.identity = id.name();
    rep.order = std::min(lhs.order(), rhs.order());
    rep.ok = true;
    for (int k = 0; k <= rep.order; ++k) {
        if (lhs[k] == rhs[k]) continue;
        rep.ok = false;
        rep.first_mismatch = k;
        rep.lhs_value = to_string(lhs[k]);
        rep.rhs_value = to_string(rhs[k]);
        break;
    }
    return rep;
}

} // namespace detail

template <class R>
IdentityReport verify_identity_over(const IdentityId& id, int order, const R& proto) {
    using S = TruncatedSeries<R>;
    const R one = one_like(proto);
    switch (id.kind) {
    case IdentityId::Kind::disc_cubic: {
        S s = discriminant_coeff_series(order, proto);
        S lin = S::constant(from_integer_like(proto, BigInt(4)), order);
        if (order >= 1) lin.coeff(1) = from_integer_like(proto, BigInt(-27));
        S lhs = lin * s.pow(3);
        S rhs = S::constant(one, order) + s.scaled(from_integer_like(proto, BigInt(3)));
        return detail::compare_series(id, lhs, rhs);
    }
    case IdentityId::Kind::trinomial_shift: {
        S b = generalized_binomial_series(id.n, 1, order, proto);
        S lhs = b.pow(id.n).shifted_up();
        S rhs = b - S::constant(one, order);
        return detail::compare_series(id, lhs, rhs);
    }
    case IdentityId::Kind::power_law: {
        S b = generalized_binomial_series(id.n, 1, order, proto);
        S lhs = b.pow(id.r);
        S rhs = generalized_binomial_series(id.n, id.r, order, proto);
        return detail::compare_series(id, lhs, rhs);
    }
    case IdentityId::Kind::char3_cubic: {
        S a = S::constant(one, order) - generalized_binomial_series(3, -1, order, proto);
        S lhs = a * (S::constant(one, order) - a).pow(2);
        S rhs = order >= 1 ? S::variable(proto, order) : S::constant(zero_like(proto), order);
        return detail::compare_series(id, lhs, rhs);
    }
    case IdentityId::Kind::hypergeometric_match:
        throw domain_error("hypergeometric_match is checked over Q only; use verify_identity");
    }
    throw domain_error("unknown identity");
}

} // namespace discroot
