// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef DRNC_CORE_MONOMIAL_HPP
#define DRNC_CORE_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace drnc {

using Expo = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xffff;

// Exponent vector with cached total degree (unweighted sum of entries).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<Expo> e) : e_(std::move(e)) {
        deg_ = 0;
        for (Expo x : e_) deg_ += x;
    }

    std::size_t nvars() const { return e_.size(); }
    Expo operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set(std::size_t i, Expo v) {
        deg_ = deg_ - e_[i] + v;
        e_[i] = v;
    }

    std::uint64_t weighted_degree(const std::vector<std::uint32_t>& w) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += std::uint64_t(e_[i]) * w[i];
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            std::uint32_t s = std::uint32_t(a.e_[i]) + b.e_[i];
            if (s > kMaxExponent) fail(Errc::guard, "exponent overflow (>= 2^16)");
            r.e_[i] = Expo(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    // this / b, requires b.divides(*this)
    Monomial quotient_by(const Monomial& b) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = Expo(e_[i] - b.e_[i]);
        r.deg_ = deg_ - b.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Plain lexicographic compare on exponent vectors; for use as a map key only.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    const std::vector<Expo>& exponents() const { return e_; }

private:
    std::vector<Expo> e_;
    std::uint32_t deg_ = 0;
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, block_elim };
    Kind kind = Kind::grevlex;
    // block_elim: the first `block` variables are eliminated.
    std::size_t block = 0;

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block_elim(std::size_t k) { return {Kind::block_elim, k}; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && (a.kind != Kind::block_elim || a.block == b.block);
    }
};

namespace detail {

// grevlex on a variable range [lo, hi): higher weighted degree first, ties by
// smallest exponent difference in the last variable that differs.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b,
                             const std::vector<std::uint32_t>& w, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += std::uint64_t(a[i]) * w[i];
        db += std::uint64_t(b[i]) * w[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline int cmp_lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

} // namespace detail

// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord,
                             const std::vector<std::uint32_t>& weights) {
    if (a.nvars() != b.nvars()) fail(Errc::invalid_argument, "monomial length mismatch");
    const std::size_t n = a.nvars();
    switch (ord.kind) {
    case MonomialOrder::Kind::grevlex:
        return detail::cmp_grevlex_range(a, b, weights, 0, n);
    case MonomialOrder::Kind::lex:
        return detail::cmp_lex_range(a, b, 0, n);
    case MonomialOrder::Kind::block_elim: {
        int c = detail::cmp_grevlex_range(a, b, weights, 0, ord.block);
        if (c != 0) return c;
        return detail::cmp_grevlex_range(a, b, weights, ord.block, n);
    }
    }
    return 0;
}

} // namespace drnc

#endif
