#pragma once

#include <cstdint>
#include <string>

#include "discroot/bigint.hpp"
#include "discroot/errors.hpp"

namespace discroot {

/// Element of F_p for a small prime p.  The modulus travels with the
/// value so that mixed-modulus arithmetic can be rejected at runtime.
class PrimeFieldElement {
public:
    PrimeFieldElement() : v_(0), p_(2) {}

    PrimeFieldElement(std::int64_t value, std::int64_t p) : p_(p) {
        check_prime(p);
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    static PrimeFieldElement from_bigint(const BigInt& n, std::int64_t p) {
        check_prime(p);
        BigInt r = n % p;
        std::int64_t v = static_cast<std::int64_t>(r.get_si());
        if (v < 0) v += p;
        return PrimeFieldElement(v, p, tag{});
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return !(a == b);
    }

    friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        require_same(a, b);
        return PrimeFieldElement((a.v_ + b.v_) % a.p_, a.p_, tag{});
    }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        require_same(a, b);
        std::int64_t v = (a.v_ - b.v_) % a.p_;
        if (v < 0) v += a.p_;
        return PrimeFieldElement(v, a.p_, tag{});
    }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a) {
        return PrimeFieldElement(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_, tag{});
    }
    friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        require_same(a, b);
        return PrimeFieldElement((a.v_ * b.v_) % a.p_, a.p_, tag{});
    }

    PrimeFieldElement& operator+=(const PrimeFieldElement& b) { return *this = *this + b; }
    PrimeFieldElement& operator-=(const PrimeFieldElement& b) { return *this = *this - b; }
    PrimeFieldElement& operator*=(const PrimeFieldElement& b) { return *this = *this * b; }

    PrimeFieldElement inverse() const {
        if (v_ == 0) throw domain_error("inverse of 0 in F_p");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return PrimeFieldElement(t, p_, tag{});
    }

private:
    struct tag {};
    PrimeFieldElement(std::int64_t v, std::int64_t p, tag) : v_(v), p_(p) {}

    static void check_prime(std::int64_t p) {
        if (p < 2) throw domain_error("modulus must be a prime >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw domain_error("modulus is not prime");
    }
    static void require_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        if (a.p_ != b.p_) throw ring_mismatch_error("mixed F_p moduli");
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline bool same_ring(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.modulus() == b.modulus();
}
inline PrimeFieldElement zero_like(const PrimeFieldElement& a) {
    return PrimeFieldElement(0, a.modulus());
}
inline PrimeFieldElement one_like(const PrimeFieldElement& a) {
    return PrimeFieldElement(1, a.modulus());
}
inline PrimeFieldElement from_integer_like(const PrimeFieldElement& a, const BigInt& n) {
    return PrimeFieldElement::from_bigint(n, a.modulus());
}
inline bool is_zero(const PrimeFieldElement& a) { return a.value() == 0; }
inline PrimeFieldElement invert(const PrimeFieldElement& a) { return a.inverse(); }
inline unsigned characteristic(const PrimeFieldElement& a) {
    return static_cast<unsigned>(a.modulus());
}
inline std::string to_string(const PrimeFieldElement& a) {
    return std::to_string(a.value());
}

} // namespace discroot
