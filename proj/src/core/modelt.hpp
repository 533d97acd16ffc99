// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Elements of graded free modules and the module term orders used by the
// Groebner engine: position-over-term, term-over-position, a position-block
// order for kernel computations, and Schreyer orders induced by a basis.
#ifndef DRNC_CORE_MODELT_HPP
#define DRNC_CORE_MODELT_HPP

#include <limits>
#include <memory>
#include <vector>

#include "poly.hpp"

namespace drnc {

// The ring-level order data a module order needs; field-independent.
struct RingOrder {
    MonomialOrder order;
    std::vector<std::uint32_t> weights;

    int cmp(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b, order, weights);
    }
};

template <class K>
RingOrder ring_order(const Ring<K>& r) {
    return RingOrder{r.order(), r.weights()};
}

class ModOrder {
public:
    virtual ~ModOrder() = default;
    // +1 if (m1,c1) > (m2,c2).
    virtual int cmp(const Monomial& m1, int c1, const Monomial& m2, int c2) const = 0;
};

using ModOrderPtr = std::shared_ptr<const ModOrder>;

// Position dominant, lower component index first; monomials break ties.
class POTOrder : public ModOrder {
public:
    explicit POTOrder(RingOrder ro) : ro_(std::move(ro)) {}
    int cmp(const Monomial& m1, int c1, const Monomial& m2, int c2) const override {
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return ro_.cmp(m1, m2);
    }

private:
    RingOrder ro_;
};

// Monomial dominant; lower component index breaks ties.
class TOPOrder : public ModOrder {
public:
    explicit TOPOrder(RingOrder ro) : ro_(std::move(ro)) {}
    int cmp(const Monomial& m1, int c1, const Monomial& m2, int c2) const override {
        int c = ro_.cmp(m1, m2);
        if (c != 0) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }

private:
    RingOrder ro_;
};

// Components below `split` dominate everything at or above it; within a
// block, defers to the inner order. Used to read kernels off augmented GBs.
class PosBlockOrder : public ModOrder {
public:
    PosBlockOrder(int split, ModOrderPtr inner) : split_(split), inner_(std::move(inner)) {}
    int cmp(const Monomial& m1, int c1, const Monomial& m2, int c2) const override {
        int b1 = c1 < split_ ? 0 : 1, b2 = c2 < split_ ? 0 : 1;
        if (b1 != b2) return b1 < b2 ? 1 : -1;
        return inner_->cmp(m1, c1, m2, c2);
    }

private:
    int split_;
    ModOrderPtr inner_;
};

// Order induced by a basis g_0..g_{s-1} of a parent module: compare the
// images m*lead(g_c) in the parent, ties by lower index.
class SchreyerOrder : public ModOrder {
public:
    struct Lead {
        Monomial m;
        int comp;
    };
    SchreyerOrder(std::vector<Lead> leads, ModOrderPtr parent)
        : leads_(std::move(leads)), parent_(std::move(parent)) {}

    int cmp(const Monomial& m1, int c1, const Monomial& m2, int c2) const override {
        const Lead& l1 = leads_[static_cast<std::size_t>(c1)];
        const Lead& l2 = leads_[static_cast<std::size_t>(c2)];
        int c = parent_->cmp(m1 * l1.m, l1.comp, m2 * l2.m, l2.comp);
        if (c != 0) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }

private:
    std::vector<Lead> leads_;
    ModOrderPtr parent_;
};

// ---------------------------------------------------------------------------

template <class K>
struct ModTerm {
    typename K::Elt c;
    Monomial m;
    std::int32_t comp;
};

// Graded free module: ambient ring plus generator degree shifts.
template <class K>
struct FreeMod {
    RingPtr<K> ring;
    std::vector<std::int64_t> shifts;

    std::size_t rank() const { return shifts.size(); }
    std::int64_t term_degree(const Monomial& m, std::int32_t comp) const {
        return static_cast<std::int64_t>(ring->degree(m)) + shifts[static_cast<std::size_t>(comp)];
    }
};

// Element of a free module as a flat term list, sorted strictly descending
// under the active module order.
template <class K>
class ModElt {
public:
    using Coeff = typename K::Elt;

    ModElt() = default;

    static ModElt from_terms(const RingPtr<K>& ring, const ModOrder& ord,
                             std::vector<ModTerm<K>> terms) {
        std::sort(terms.begin(), terms.end(), [&](const ModTerm<K>& a, const ModTerm<K>& b) {
            return ord.cmp(a.m, a.comp, b.m, b.comp) > 0;
        });
        const K& F = ring->field();
        ModElt r;
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().m == t.m && r.terms_.back().comp == t.comp) {
                r.terms_.back().c = F.add(r.terms_.back().c, t.c);
                if (F.is_zero(r.terms_.back().c)) r.terms_.pop_back();
            } else if (!F.is_zero(t.c)) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    static ModElt unit(const RingPtr<K>& ring, std::int32_t comp) {
        ModElt r;
        r.terms_.push_back({ring->field().one(), Monomial(ring->nvars()), comp});
        return r;
    }

    // Caller guarantees terms are sorted descending under the active order.
    static ModElt from_sorted(std::vector<ModTerm<K>> terms) {
        ModElt r;
        r.terms_ = std::move(terms);
        return r;
    }

    const std::vector<ModTerm<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const ModTerm<K>& lead() const { return terms_.front(); }

    // a - (c * m) * b, both sorted under `ord`.
    static ModElt axpy(const K& F, const ModOrder& ord, const ModElt& a, const Coeff& c,
                       const Monomial& m, const ModElt& b) {
        ModElt r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            Monomial bm = b.terms_[j].m * m;
            int cv = ord.cmp(a.terms_[i].m, a.terms_[i].comp, bm, b.terms_[j].comp);
            if (cv > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cv < 0) {
                Coeff nc = F.neg(F.mul(c, b.terms_[j].c));
                r.terms_.push_back({std::move(nc), std::move(bm), b.terms_[j].comp});
                ++j;
            } else {
                Coeff s = F.sub(a.terms_[i].c, F.mul(c, b.terms_[j].c));
                if (!F.is_zero(s)) r.terms_.push_back({std::move(s), a.terms_[i].m, a.terms_[i].comp});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            Coeff nc = F.neg(F.mul(c, b.terms_[j].c));
            r.terms_.push_back({std::move(nc), b.terms_[j].m * m, b.terms_[j].comp});
        }
        return r;
    }

    ModElt times_monomial(const K& F, const Monomial& m, const Coeff& c) const {
        ModElt r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({F.mul(t.c, c), t.m * m, t.comp});
        return r;
    }

    ModElt scaled(const K& F, const Coeff& c) const {
        ModElt r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({F.mul(t.c, c), t.m, t.comp});
        return r;
    }

    ModElt monic(const K& F) const {
        if (is_zero()) return *this;
        return scaled(F, F.inv(terms_.front().c));
    }

    bool is_homogeneous(const FreeMod<K>& fm) const {
        if (terms_.empty()) return true;
        std::int64_t d = fm.term_degree(terms_.front().m, terms_.front().comp);
        for (const auto& t : terms_)
            if (fm.term_degree(t.m, t.comp) != d) return false;
        return true;
    }

    std::int64_t degree(const FreeMod<K>& fm) const {
        std::int64_t d = std::numeric_limits<std::int64_t>::min();
        for (const auto& t : terms_) d = std::max(d, fm.term_degree(t.m, t.comp));
        return d;
    }

    bool equal(const K& F, const ModElt& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].comp != o.terms_[i].comp || terms_[i].m != o.terms_[i].m ||
                !F.eq(terms_[i].c, o.terms_[i].c))
                return false;
        return true;
    }

    // Component `comp` as a plain polynomial.
    Poly<K> component(const RingPtr<K>& ring, std::int32_t comp) const {
        std::vector<typename Poly<K>::Term> ts;
        for (const auto& t : terms_)
            if (t.comp == comp) ts.push_back({t.m, t.c});
        return Poly<K>::from_terms(ring, std::move(ts));
    }

    std::vector<std::int32_t> components_present() const {
        std::vector<std::int32_t> cs;
        for (const auto& t : terms_)
            if (std::find(cs.begin(), cs.end(), t.comp) == cs.end()) cs.push_back(t.comp);
        return cs;
    }

private:
    std::vector<ModTerm<K>> terms_;
};

// Poly term order and every module order here agree within a fixed
// component, so the sorted term list carries over directly.
template <class K>
ModElt<K> poly_to_modelt(const Poly<K>& p, std::int32_t comp = 0) {
    std::vector<ModTerm<K>> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back({t.c, t.m, comp});
    return ModElt<K>::from_sorted(std::move(ts));
}

} // namespace drnc

#endif
