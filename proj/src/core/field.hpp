// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exact coefficient fields: a prime field F_p with word-sized odd p, and the
// rationals. The Groebner/resolution machinery is templated on these.
#ifndef DRNC_CORE_FIELD_HPP
#define DRNC_CORE_FIELD_HPP

#include <cstdint>
#include <string>

#include "error.hpp"
#include "numeric.hpp"

namespace drnc {

inline constexpr std::uint32_t kDefaultPrime = 32003;

// F_p, canonical representatives in [0, p).
class FpField {
public:
    using Elt = std::uint32_t;
    static constexpr bool is_prime_field = true;

    explicit FpField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            fail(Errc::invalid_argument, "field characteristic must be an odd prime: " + std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    bool is_zero(Elt a) const { return a == 0; }
    bool is_one(Elt a) const { return a == 1; }
    bool eq(Elt a, Elt b) const { return a == b; }

    Elt add(Elt a, Elt b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return Elt(s);
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : Elt(a + p_ - b); }
    Elt neg(Elt a) const { return a == 0 ? 0 : Elt(p_ - a); }
    Elt mul(Elt a, Elt b) const { return Elt((std::uint64_t(a) * b) % p_); }
    Elt inv(Elt a) const {
        if (a == 0) fail(Errc::invalid_argument, "division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return Elt(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt from_long(std::int64_t v) const {
        std::int64_t m = v % std::int64_t(p_);
        if (m < 0) m += p_;
        return Elt(m);
    }
    Elt from_rat(const BigRat& q) const {
        BigInt n = q.numerator(), d = q.denominator();
        BigInt p(static_cast<long>(p_));
        BigInt rn, rd;
        mpz_mod(rn.raw(), n.raw(), p.raw());
        mpz_mod(rd.raw(), d.raw(), p.raw());
        Elt den = Elt(mpz_get_ui(rd.raw()));
        if (den == 0) fail(Errc::invalid_argument, "rational with denominator divisible by p");
        return div(Elt(mpz_get_ui(rn.raw())), den);
    }

    // Representative of minimal absolute value; used by printers.
    std::int64_t balanced(Elt a) const {
        return a <= p_ / 2 ? std::int64_t(a) : std::int64_t(a) - std::int64_t(p_);
    }

    std::string to_string(Elt a) const { return std::to_string(balanced(a)); }

    friend bool operator==(const FpField& a, const FpField& b) { return a.p_ == b.p_; }

private:
    static bool is_prime(std::uint32_t n) {
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    std::uint32_t p_;
};

class QQField {
public:
    using Elt = BigRat;
    static constexpr bool is_prime_field = false;

    std::uint32_t characteristic() const { return 0; }

    Elt zero() const { return BigRat(0); }
    Elt one() const { return BigRat(1); }
    bool is_zero(const Elt& a) const { return a.is_zero(); }
    bool is_one(const Elt& a) const { return a == BigRat(1); }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a.is_zero()) fail(Errc::invalid_argument, "division by zero in QQ");
        return BigRat(1) / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return a / b; }

    Elt from_long(std::int64_t v) const { return BigRat(static_cast<long>(v)); }
    Elt from_rat(const BigRat& q) const { return q; }

    std::string to_string(const Elt& a) const { return a.to_string(); }

    friend bool operator==(const QQField&, const QQField&) { return true; }
};

} // namespace drnc

#endif
