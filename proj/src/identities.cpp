#include "discroot/identities.hpp"

#include <sstream>

namespace discroot {

std::string RingId::name() const {
    switch (kind) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F" + std::to_string(p);
    }
    return "?";
}

RingId RingId::parse(const std::string& s) {
    if (s == "Z" || s == "z") return integers();
    if (s == "Q" || s == "q") return rationals();
    if ((s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))) {
        return gf(std::stoll(s.substr(1)));
    }
    throw domain_error("unknown ring '" + s + "' (expected Z, Q, or F<p>)");
}

std::string IdentityId::name() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::disc_cubic: os << "disc_cubic_identity"; break;
    case Kind::trinomial_shift: os << "trinomial_shift(" << n << ")"; break;
    case Kind::power_law: os << "power_law(" << n << "," << r << ")"; break;
    case Kind::char3_cubic: os << "char3_cubic"; break;
    case Kind::hypergeometric_match: os << "hypergeometric_match"; break;
    }
    return os.str();
}

IdentityId IdentityId::parse(const std::string& s) {
    auto args_of = [&](const std::string& head) -> std::optional<std::vector<long>> {
        if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return std::nullopt;
        std::vector<long> args;
        std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) args.push_back(std::stol(tok));
        return args;
    };
    if (s == "disc_cubic_identity") return {Kind::disc_cubic, 3, 1};
    if (s == "char3_cubic") return {Kind::char3_cubic, 3, -1};
    if (s == "hypergeometric_match") return {Kind::hypergeometric_match, 3, 1};
    if (auto a = args_of("trinomial_shift")) {
        if (a->size() != 1) throw domain_error("trinomial_shift takes one parameter");
        return {Kind::trinomial_shift, (*a)[0], 1};
    }
    if (auto a = args_of("power_law")) {
        if (a->size() != 2) throw domain_error("power_law takes two parameters");
        return {Kind::power_law, (*a)[0], (*a)[1]};
    }
    throw domain_error("unknown identity '" + s + "'");
}

namespace {

IdentityReport check_hypergeometric_match(int order) {
    IdentityReport rep;
    rep.identity = IdentityId{IdentityId::Kind::hypergeometric_match, 3, 1}.name();
    rep.ring = "Q";
    rep.order = order;
    rep.ok = true;
    const Rational scale = make_rational(27, 4);
    const Rational a = make_rational(1, 3), b = make_rational(2, 3), c = make_rational(1, 2);
    Rational scale_pow = 1;
    for (int n = 0; n <= order; ++n) {
        Rational lhs = hypergeometric_coefficient(a, b, c, static_cast<unsigned long>(n)) * scale_pow;
        Rational rhs(central_trinomial_coeff(static_cast<unsigned long>(n)));
        if (lhs != rhs) {
            rep.ok = false;
            rep.first_mismatch = n;
            rep.lhs_value = to_string(lhs);
            rep.rhs_value = to_string(rhs);
            break;
        }
        scale_pow *= scale;
    }
    return rep;
}

} // namespace

IdentityReport verify_identity(const IdentityId& id, int order, const RingId& ring) {
    if (id.kind == IdentityId::Kind::hypergeometric_match) {
        if (ring.kind != RingId::Kind::rationals)
            throw domain_error("hypergeometric_match is only defined over Q");
        return check_hypergeometric_match(order);
    }
    IdentityReport rep;
    switch (ring.kind) {
    case RingId::Kind::integers:
        rep = verify_identity_over(id, order, BigInt(0));
        break;
    case RingId::Kind::rationals:
        rep = verify_identity_over(id, order, Rational(0));
        break;
    case RingId::Kind::prime_field:
        rep = verify_identity_over(id, order, PrimeFieldElement(0, ring.p));
        break;
    }
    rep.ring = ring.name();
    return rep;
}

std::vector<IdentityReport> verify_all_identities(int order) {
    std::vector<IdentityReport> out;
    using K = IdentityId::Kind;
    out.push_back(verify_identity({K::disc_cubic, 3, 1}, order, RingId::rationals()));
    for (long n = 2; n <= 6; ++n)
        out.push_back(verify_identity({K::trinomial_shift, n, 1}, order, RingId::rationals()));
    for (long n = 2; n <= 5; ++n)
        for (long r : {-2L, -1L, 1L, 2L, 3L})
            out.push_back(verify_identity({K::power_law, n, r}, order, RingId::rationals()));
    out.push_back(verify_identity({K::char3_cubic, 3, -1}, order, RingId::integers()));
    out.push_back(verify_identity({K::char3_cubic, 3, -1}, order, RingId::gf(3)));
    out.push_back(verify_identity({K::hypergeometric_match, 3, 1}, order, RingId::rationals()));
    return out;
}

} // namespace discroot
