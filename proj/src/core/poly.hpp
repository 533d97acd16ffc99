// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef DRNC_CORE_POLY_HPP
#define DRNC_CORE_POLY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "ring.hpp"

namespace drnc {

// Sparse multivariate polynomial: terms sorted strictly descending under the
// ring's monomial order, no zero coefficients, no duplicate monomials.
template <class K>
class Poly {
public:
    using Coeff = typename K::Elt;
    struct Term {
        Monomial m;
        Coeff c;
    };

    Poly() = default;
    explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr<K> ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr<K> ring, Coeff c) {
        Poly p(ring);
        if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
        return p;
    }
    static Poly variable(RingPtr<K> ring, std::size_t i, Expo e = 1) {
        Poly p(ring);
        Monomial m(ring->nvars());
        m.set(i, e);
        p.terms_.push_back({std::move(m), ring->field().one()});
        return p;
    }
    static Poly monomial(RingPtr<K> ring, Monomial m, Coeff c) {
        Poly p(ring);
        if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    // Builds canonical form from arbitrary (monomial, coeff) pairs.
    static Poly from_terms(RingPtr<K> ring, std::vector<Term> terms) {
        Poly p(ring);
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return ring->compare(a.m, b.m) > 0; });
        const K& F = ring->field();
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = F.add(p.terms_.back().c, t.c);
                if (F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
            } else if (!F.is_zero(t.c)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& lead_monomial() const { return terms_.front().m; }
    const Coeff& lead_coeff() const { return terms_.front().c; }

    // Weighted degree of the highest-degree term.
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, ring_->degree(t.m));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint64_t d = ring_->degree(terms_.front().m);
        for (const auto& t : terms_)
            if (ring_->degree(t.m) != d) return false;
        return true;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    Poly operator-() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        const K& F = ring_->field();
        for (const auto& t : terms_) r.terms_.push_back({t.m, F.neg(t.c)});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_ ? a.ring_ : b.ring_);
        const K& F = a.ring_->field();
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc.push_back({ta.m * tb.m, F.mul(ta.c, tb.c)});
        return from_terms(a.ring_, std::move(acc));
    }

    Poly scaled(const Coeff& c) const {
        const K& F = ring_->field();
        if (F.is_zero(c)) return Poly(ring_);
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m, F.mul(t.c, c)});
        return r;
    }

    Poly times_monomial(const Monomial& m, const Coeff& c) const {
        const K& F = ring_->field();
        if (F.is_zero(c)) return Poly(ring_);
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field().inv(lead_coeff()));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        const K& F = a.ring_ ? a.ring_->field() : b.ring_->field();
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !F.eq(a.terms_[i].c, b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        require_same_ring(a.ring_, b.ring_);
        RingPtr<K> ring = a.ring_ ? a.ring_ : b.ring_;
        const K& F = ring->field();
        Poly r(ring);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ring->compare(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                auto t = b.terms_[j++];
                if (subtract) t.c = F.neg(t.c);
                r.terms_.push_back(std::move(t));
            } else {
                Coeff s = subtract ? F.sub(a.terms_[i].c, b.terms_[j].c)
                                   : F.add(a.terms_[i].c, b.terms_[j].c);
                if (!F.is_zero(s)) r.terms_.push_back({a.terms_[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            auto t = b.terms_[j];
            if (subtract) t.c = F.neg(t.c);
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    RingPtr<K> ring_;
    std::vector<Term> terms_;
};

// Evaluates the ring homomorphism sending variable i of `p`'s ring to
// images[i]; all images must live in `target`.
template <class K>
Poly<K> map_through(const Poly<K>& p, const RingPtr<K>& target, const std::vector<Poly<K>>& images) {
    if (p.is_zero()) return Poly<K>::zero(target);
    if (images.size() != p.ring()->nvars())
        fail(Errc::invalid_argument, "image count does not match variable count");
    Poly<K> acc = Poly<K>::zero(target);
    for (const auto& t : p.terms()) {
        Poly<K> prod = Poly<K>::constant(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (Expo e = 0; e < t.m[i]; ++e) prod = prod * images[i];
            if (prod.is_zero()) break;
        }
        acc = acc + prod;
    }
    return acc;
}

template <class K>
const Monomial& lex_lead_monomial(const Poly<K>& p) {
    const Monomial* best = &p.terms()[0].m;
    for (const auto& t : p.terms())
        if (detail::cmp_lex_range(t.m, *best, 0, t.m.nvars()) > 0) best = &t.m;
    return *best;
}

// Scales each polynomial so the coefficient of its lexicographically largest
// monomial is one, and sorts the list by those monomials, largest first. This
// is the presentation generator lists carry when they face the user.
template <class K>
void presentation_normalize(std::vector<Poly<K>>& polys) {
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        const Monomial lead = lex_lead_monomial(p);
        for (const auto& t : p.terms())
            if (t.m == lead) {
                p = p.scaled(p.ring()->field().inv(t.c));
                break;
            }
    }
    std::sort(polys.begin(), polys.end(), [](const Poly<K>& a, const Poly<K>& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        int c = detail::cmp_lex_range(lex_lead_monomial(a), lex_lead_monomial(b), 0, a.ring()->nvars());
        if (c != 0) return c > 0;
        return a.size() < b.size();
    });
}

template <class K>
void require_homogeneous(const std::vector<Poly<K>>& polys, const char* what) {
    for (const auto& p : polys)
        if (!p.is_homogeneous()) fail(Errc::inhomogeneous, std::string(what) + ": inhomogeneous input");
}

} // namespace drnc

#endif
