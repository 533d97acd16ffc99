// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision integers and rationals on top of GMP. Rationals are
// kept canonical: lowest terms, positive denominator.
#ifndef DRNC_CORE_NUMERIC_HPP
#define DRNC_CORE_NUMERIC_HPP

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "error.hpp"

namespace drnc {

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); } // NOLINT(google-explicit-constructor)
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            fail(Errc::parse, "malformed integer literal: " + s);
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) fail(Errc::guard, "integer exceeds machine range: " + to_string());
        return mpz_get_si(z_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    mpz_t& raw() { return z_; }
    const mpz_t& raw() const { return z_; }

private:
    mpz_t z_;
};

class BigRat {
public:
    BigRat() { mpq_init(q_); }
    BigRat(long v) { // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRat(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) fail(Errc::invalid_argument, "zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    BigRat(const BigRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRat() { mpq_clear(q_); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) fail(Errc::invalid_argument, "division by zero");
        BigRat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const BigRat& a, const BigRat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
    friend bool operator<(const BigRat& a, const BigRat& b) { return mpq_cmp(a.q_, b.q_) < 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    std::string to_string() const {
        std::string s = numerator().to_string();
        if (!is_integer()) s += "/" + denominator().to_string();
        return s;
    }

private:
    mpq_t q_;
};

// Exact binomial coefficient, small enough for the tables this library builds.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (std::int64_t i = 0; i < k; ++i) {
        r = r * BigInt(n - i);
        BigInt q;
        mpz_divexact_ui(q.raw(), r.raw(), static_cast<unsigned long>(i + 1));
        r = q;
    }
    return r.to_long();
}

} // namespace drnc

#endif
