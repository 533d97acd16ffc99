// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal graded free resolutions via iterated Schreyer syzygies followed by
// pruning of scalar entries, plus Betti extraction and Hilbert data.
#ifndef DRNC_CORE_RESOLVE_HPP
#define DRNC_CORE_RESOLVE_HPP

#include "groebner.hpp"
#include "tables.hpp"

namespace drnc {

template <class K>
struct SparseMat {
    std::size_t rows = 0;
    // cols[c]: (row, entry) sorted by row, entries nonzero
    std::vector<std::vector<std::pair<std::int32_t, Poly<K>>>> cols;

    std::size_t ncols() const { return cols.size(); }
};

// Chain of graded matrices mats[k]: F_{k+1} -> F_k, with F_0 the ambient free
// module of the presented module; shifts track generator degrees per level.
template <class K>
struct Resolution {
    RingPtr<K> ring;
    std::vector<std::int64_t> f0_shifts;
    std::vector<std::vector<std::int64_t>> level_shifts;
    std::vector<SparseMat<K>> mats;
    bool minimal = false;
    bool truncated = false;

    std::size_t length() const { return mats.size(); }
};

namespace detail {

template <class K>
SparseMat<K> matrix_of(const RingPtr<K>& ring, std::size_t rows, const std::vector<ModElt<K>>& cols) {
    SparseMat<K> m;
    m.rows = rows;
    m.cols.reserve(cols.size());
    for (const auto& g : cols) {
        std::vector<std::pair<std::int32_t, Poly<K>>> col;
        for (std::int32_t comp : g.components_present()) col.push_back({comp, g.component(ring, comp)});
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m.cols.push_back(std::move(col));
    }
    return m;
}

// Stable level sort: components ascending, lead monomials in descending
// lexicographic order (this keeps iterated Schreyer resolutions short).
template <class K>
void schreyer_sort(std::vector<ModElt<K>>& gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const ModElt<K>& a, const ModElt<K>& b) {
        const auto& la = a.lead();
        const auto& lb = b.lead();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        return detail::cmp_lex_range(la.m, lb.m, 0, la.m.nvars()) > 0;
    });
}

} // namespace detail

// Non-minimal (Schreyer) resolution of the cokernel of the module generated
// by `gens` inside `fm`. Levels are computed until the syzygies vanish or
// `max_length` matrices have been produced, in which case the result is
// flagged truncated.
template <class K>
Resolution<K> schreyer_resolution(const FreeMod<K>& fm, const std::vector<ModElt<K>>& gens,
                                  ModOrderPtr order, std::optional<int> max_length = {}) {
    const RingPtr<K>& ring = fm.ring;
    int limit = max_length.value_or(static_cast<int>(ring->nvars()) + 8);
    if (limit < 1) fail(Errc::invalid_argument, "max_length must be positive");

    Resolution<K> res;
    res.ring = ring;
    res.f0_shifts = fm.shifts;

    GroebnerBasis<K> gb = buchberger(fm, gens, std::move(order));
    std::vector<ModElt<K>> level = std::move(gb.gens);
    if (level.empty()) return res;
    detail::schreyer_sort(level);

    FreeMod<K> cur_fm = fm;
    ModOrderPtr cur_ord = gb.order;
    std::size_t cur_rows = fm.rank();

    for (int k = 0;; ++k) {
        if (k == limit) {
            res.truncated = true;
            break;
        }
        res.mats.push_back(detail::matrix_of(ring, cur_rows, level));
        std::vector<std::int64_t> shifts;
        for (const auto& g : level) shifts.push_back(g.degree(cur_fm));
        res.level_shifts.push_back(shifts);

        SchreyerLevel<K> next = schreyer_syzygies(cur_fm, level, cur_ord);
        if (next.syzygies.empty()) break;
        detail::schreyer_sort(next.syzygies);
        cur_rows = level.size();
        level = std::move(next.syzygies);
        cur_fm = std::move(next.module);
        cur_ord = std::move(next.order);
    }
    return res;
}

namespace detail {

template <class K>
void erase_row(SparseMat<K>& m, std::int32_t row) {
    for (auto& col : m.cols) {
        std::erase_if(col, [&](const auto& e) { return e.first == row; });
        for (auto& e : col)
            if (e.first > row) --e.first;
    }
    --m.rows;
}

template <class K>
const Poly<K>* entry_at(const SparseMat<K>& m, std::int32_t row, std::size_t col) {
    for (const auto& e : m.cols[col])
        if (e.first == row) return &e.second;
    return nullptr;
}

template <class K>
void set_entry(SparseMat<K>& m, std::int32_t row, std::size_t col, Poly<K> v) {
    auto& c = m.cols[col];
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (it->first == row) {
            if (v.is_zero()) c.erase(it);
            else it->second = std::move(v);
            return;
        }
        if (it->first > row) {
            if (!v.is_zero()) c.insert(it, {row, std::move(v)});
            return;
        }
    }
    if (!v.is_zero()) c.push_back({row, std::move(v)});
}

} // namespace detail

// Prunes every scalar (degree-zero) entry from the complex, yielding a
// quasi-isomorphic minimal resolution. Pivots are taken at the
// lexicographically smallest (row, column) position, level by level.
template <class K>
Resolution<K> minimalize(Resolution<K> res) {
    const RingPtr<K>& ring = res.ring;
    const K& F = ring->field();

    for (std::size_t li = 0; li < res.mats.size(); ++li) {
        SparseMat<K>& A = res.mats[li];
        for (;;) {
            // smallest (row, col) scalar entry
            std::int32_t pr = -1;
            std::size_t pc = 0;
            for (std::size_t c = 0; c < A.cols.size(); ++c)
                for (const auto& [r, p] : A.cols[c])
                    if (p.lead_monomial().is_one() && (pr < 0 || r < pr || (r == pr && c < pc))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) break;

            const Poly<K>* pivot = detail::entry_at(A, pr, pc);
            typename K::Elt u = pivot->lead_coeff();
            std::vector<std::pair<std::int32_t, Poly<K>>> pivot_col = A.cols[pc];

            for (std::size_t c = 0; c < A.cols.size(); ++c) {
                if (c == pc) continue;
                const Poly<K>* top = detail::entry_at(A, pr, c);
                if (!top) continue;
                Poly<K> lambda = top->scaled(F.inv(u));
                // col_c -= lambda * pivot_col
                for (const auto& [r, pv] : pivot_col) {
                    const Poly<K>* cur = detail::entry_at(A, r, c);
                    Poly<K> upd = cur ? *cur - lambda * pv : -(lambda * pv);
                    detail::set_entry(A, r, c, std::move(upd));
                }
            }

            // split off the pivot summand
            A.cols.erase(A.cols.begin() + static_cast<std::ptrdiff_t>(pc));
            res.level_shifts[li].erase(res.level_shifts[li].begin() + static_cast<std::ptrdiff_t>(pc));
            detail::erase_row(A, pr);
            if (li == 0) {
                res.f0_shifts.erase(res.f0_shifts.begin() + pr);
            } else {
                res.level_shifts[li - 1].erase(res.level_shifts[li - 1].begin() + pr);
                auto& prev = res.mats[li - 1];
                prev.cols.erase(prev.cols.begin() + pr);
            }
            if (li + 1 < res.mats.size()) detail::erase_row(res.mats[li + 1], static_cast<std::int32_t>(pc));
        }
    }

    while (!res.mats.empty() && res.mats.back().ncols() == 0) {
        res.mats.pop_back();
        res.level_shifts.pop_back();
    }
    for (std::size_t li = 0; li < res.mats.size(); ++li)
        for (const auto& col : res.mats[li].cols)
            if (col.empty()) fail(Errc::internal, "minimalization produced a zero column");

    res.minimal = true;
    return res;
}

template <class K>
Resolution<K> min_resolution(const FreeMod<K>& fm, const std::vector<ModElt<K>>& gens,
                             ModOrderPtr order, std::optional<int> max_length = {}) {
    return minimalize(schreyer_resolution(fm, gens, std::move(order), max_length));
}

template <class K>
Resolution<K> min_resolution_ideal(const Ideal<K>& ideal, std::optional<int> max_length = {}) {
    FreeMod<K> fm{ideal.ring, {0}};
    auto order = std::make_shared<POTOrder>(ring_order(*ideal.ring));
    std::vector<ModElt<K>> gens;
    for (const auto& p : ideal.gens) {
        require_same_ring(p.ring(), ideal.ring);
        gens.push_back(poly_to_modelt(p));
    }
    return min_resolution(fm, gens, std::move(order), max_length);
}

template <class K>
BettiTable betti(const Resolution<K>& res) {
    if (!res.minimal) fail(Errc::invalid_argument, "betti: resolution is not minimal");
    BettiTable t;
    for (auto s : res.f0_shifts) t.add(0, static_cast<int>(s), 1);
    for (std::size_t li = 0; li < res.level_shifts.size(); ++li)
        for (auto s : res.level_shifts[li]) t.add(static_cast<int>(li) + 1, static_cast<int>(s), 1);
    return t;
}

// d_i . d_{i+1} == 0 as an exact matrix product check.
template <class K>
bool composes_to_zero(const Resolution<K>& res) {
    for (std::size_t li = 0; li + 1 < res.mats.size(); ++li) {
        const SparseMat<K>& A = res.mats[li];
        const SparseMat<K>& B = res.mats[li + 1];
        for (std::size_t c = 0; c < B.ncols(); ++c) {
            std::map<std::int32_t, Poly<K>> acc;
            for (const auto& [mid, q] : B.cols[c]) {
                for (const auto& [r, p] : A.cols[static_cast<std::size_t>(mid)]) {
                    auto it = acc.find(r);
                    if (it == acc.end()) acc.emplace(r, p * q);
                    else it->second = it->second + p * q;
                }
            }
            for (auto& [r, p] : acc)
                if (!p.is_zero()) return false;
        }
    }
    return true;
}

// No entry of any differential has a scalar part.
template <class K>
bool is_minimal_complex(const Resolution<K>& res) {
    for (const auto& m : res.mats)
        for (const auto& col : m.cols)
            for (const auto& [r, p] : col)
                if (!p.is_zero() && p.lead_monomial().is_one()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hilbert data

// Numerator K(t) with HS_{R/I}(t) = K(t)/(1-t)^nvars, from the lead term
// monomial ideal by the standard pivot-splitting recursion.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

struct HilbertData {
    std::vector<std::int64_t> numerator; // coefficients of K(t), low to high
    std::size_t var_count = 0;
    std::vector<BigRat> hilbert_polynomial; // coefficients in t, low to high

    std::string polynomial_text() const;
    BigRat polynomial_at(std::int64_t t) const;
};

std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& numerator,
                                              std::size_t nvars, std::size_t upto);
HilbertData hilbert_from_numerator(std::vector<std::int64_t> numerator, std::size_t nvars);

template <class K>
std::vector<Monomial> lead_monomials(const GroebnerBasis<K>& gb) {
    std::vector<Monomial> leads;
    leads.reserve(gb.gens.size());
    for (const auto& g : gb.gens) leads.push_back(g.lead().m);
    return leads;
}

// Hilbert data of R/I for a homogeneous ideal (the zero ideal is allowed and
// yields the free ring's series).
template <class K>
HilbertData hilbert(const Ideal<K>& ideal) {
    if (!ideal.ring->standard_graded())
        fail(Errc::invalid_argument, "hilbert: ring must be standard graded");
    require_homogeneous(ideal.gens, "hilbert");
    GroebnerBasis<K> gb = buchberger_ideal(ideal);
    return hilbert_from_numerator(hilbert_numerator(lead_monomials(gb), ideal.ring->nvars()),
                                  ideal.ring->nvars());
}

// dim_k (R/I)_degree via the Hilbert series of the lead term ideal.
template <class K>
std::int64_t quotient_dim(const GroebnerBasis<K>& gb, std::size_t degree) {
    std::size_t n = gb.ambient.ring->nvars();
    auto coeffs = series_coefficients(hilbert_numerator(lead_monomials(gb), n), n, degree);
    return coeffs[degree];
}

} // namespace drnc

#endif
