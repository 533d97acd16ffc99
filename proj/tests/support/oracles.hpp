// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles: brute-force linear algebra on graded pieces, independent
// of the Groebner/resolution code paths they check.
#ifndef DRNC_TESTS_ORACLES_HPP
#define DRNC_TESTS_ORACLES_HPP

#include <map>

#include "core/resolve.hpp"

namespace drnc::testing {

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    std::vector<Expo> cur(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v + 1 == nvars) {
            cur[v] = static_cast<Expo>(left);
            out.emplace_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = static_cast<Expo>(e);
            rec(v + 1, left - e);
        }
    };
    if (nvars == 0) return out;
    rec(0, d);
    return out;
}

// Rank of a dense matrix over F_p (rows are modified in place).
inline std::size_t fp_rank(const FpField& F, std::vector<std::vector<FpField::Elt>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        FpField::Elt inv = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            FpField::Elt f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

// dim of the degree-d piece of the ideal generated by gens (brute force span).
inline std::size_t ideal_dim_oracle(const std::vector<Poly<FpField>>& gens, int d) {
    if (gens.empty()) return 0;
    const auto& ring = gens[0].ring();
    const FpField& F = ring->field();
    auto basis = monomials_of_degree(ring->nvars(), d);
    std::map<std::vector<Expo>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;

    std::vector<std::vector<FpField::Elt>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int dg = static_cast<int>(g.degree());
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), d - dg)) {
            std::vector<FpField::Elt> row(basis.size(), 0);
            for (const auto& t : g.terms()) row[index.at((t.m * m).exponents())] = t.c;
            rows.push_back(std::move(row));
        }
    }
    return fp_rank(F, std::move(rows));
}

// dim of the degree-d syzygy space of gens: kernel of (h_k) -> sum h_k g_k.
inline std::size_t syzygy_dim_oracle(const std::vector<Poly<FpField>>& gens, int d) {
    const auto& ring = gens[0].ring();
    const FpField& F = ring->field();
    auto basis = monomials_of_degree(ring->nvars(), d);
    std::map<std::vector<Expo>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;

    std::vector<std::vector<FpField::Elt>> cols; // one column per (k, multiplier)
    std::size_t domain = 0;
    for (const auto& g : gens) {
        int dg = static_cast<int>(g.degree());
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), d - dg)) {
            std::vector<FpField::Elt> col(basis.size(), 0);
            for (const auto& t : g.terms()) col[index.at((t.m * m).exponents())] = t.c;
            cols.push_back(std::move(col));
            ++domain;
        }
    }
    return domain - fp_rank(F, std::move(cols));
}

// dim of the degree-d piece of the submodule of `fm` generated by elts.
inline std::size_t module_span_dim_oracle(const FreeMod<FpField>& fm,
                                          const std::vector<ModElt<FpField>>& elts, int d) {
    const auto& ring = fm.ring;
    const FpField& F = ring->field();
    // coordinates: (comp, monomial of degree d - shift[comp])
    std::map<std::pair<std::int32_t, std::vector<Expo>>, std::size_t> index;
    std::size_t dim = 0;
    for (std::size_t c = 0; c < fm.rank(); ++c) {
        int rem = d - static_cast<int>(fm.shifts[c]);
        if (rem < 0) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), rem))
            index[{static_cast<std::int32_t>(c), m.exponents()}] = dim++;
    }
    std::vector<std::vector<FpField::Elt>> rows;
    for (const auto& e : elts) {
        if (e.is_zero()) continue;
        int de = static_cast<int>(e.degree(fm));
        if (de > d) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), d - de)) {
            std::vector<FpField::Elt> row(dim, 0);
            for (const auto& t : e.terms()) row[index.at({t.comp, (t.m * m).exponents()})] = t.c;
            rows.push_back(std::move(row));
        }
    }
    return fp_rank(F, std::move(rows));
}

// Degree-D matrix of one differential as a dense map between the monomial
// bases of the graded pieces; used for rank/exactness certificates.
inline std::vector<std::vector<FpField::Elt>> differential_piece(
    const Resolution<FpField>& res, std::size_t level, int degree) {
    const auto& ring = res.ring;
    const auto& A = res.mats[level];
    const std::vector<std::int64_t>& row_shifts =
        level == 0 ? res.f0_shifts : res.level_shifts[level - 1];
    const std::vector<std::int64_t>& col_shifts = res.level_shifts[level];

    std::map<std::pair<std::int32_t, std::vector<Expo>>, std::size_t> target_index;
    std::size_t target_dim = 0;
    for (std::size_t r = 0; r < row_shifts.size(); ++r) {
        int rem = degree - static_cast<int>(row_shifts[r]);
        if (rem < 0) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), rem))
            target_index[{static_cast<std::int32_t>(r), m.exponents()}] = target_dim++;
    }
    std::vector<std::vector<FpField::Elt>> cols;
    for (std::size_t c = 0; c < A.ncols(); ++c) {
        int rem = degree - static_cast<int>(col_shifts[c]);
        if (rem < 0) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), rem)) {
            std::vector<FpField::Elt> col(target_dim, 0);
            for (const auto& [r, p] : A.cols[c])
                for (const auto& t : p.terms())
                    col[target_index.at({r, (t.m * m).exponents()})] = t.c;
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

// Exactness of the complex at every interior spot, for graded pieces up to
// `max_degree`: nullity of d_k equals the rank of d_{k+1}, and the last
// differential is injective.
inline bool resolution_exact_up_to(const Resolution<FpField>& res, int max_degree) {
    const FpField& F = res.ring->field();
    for (int D = 0; D <= max_degree; ++D) {
        std::vector<std::size_t> ranks;
        std::vector<std::size_t> domain_dims;
        for (std::size_t k = 0; k < res.mats.size(); ++k) {
            auto cols = differential_piece(res, k, D);
            domain_dims.push_back(cols.size());
            ranks.push_back(fp_rank(F, std::move(cols)));
        }
        for (std::size_t k = 0; k + 1 < res.mats.size(); ++k) {
            std::size_t nullity = domain_dims[k] - ranks[k];
            if (nullity != ranks[k + 1]) return false;
        }
        if (!res.mats.empty() && domain_dims.back() != ranks.back()) return false;
    }
    return true;
}

// Full Buchberger criterion: every S-pair of the basis reduces to zero.
template <class K>
bool buchberger_criterion_holds(const GroebnerBasis<K>& gb) {
    const auto& ring = gb.ambient.ring;
    const K& F = ring->field();
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
            const auto& li = gb.gens[i].lead();
            const auto& lj = gb.gens[j].lead();
            if (li.comp != lj.comp) continue;
            Monomial L = lcm(li.m, lj.m);
            ModElt<K> s = ModElt<K>::axpy(
                F, *gb.order,
                gb.gens[i].times_monomial(F, L.quotient_by(li.m), F.inv(li.c)), F.inv(lj.c),
                L.quotient_by(lj.m), gb.gens[j]);
            if (!reduce_full(s, gb.gens, *gb.order, ring).is_zero()) return false;
        }
    return true;
}

// sum_k s_k * g_k as an element of the ambient module of the gens.
template <class K>
ModElt<K> apply_syzygy(const FreeMod<K>& fm, const std::vector<ModElt<K>>& gens,
                       const ModOrderPtr& ord, const ModElt<K>& syz) {
    const K& F = fm.ring->field();
    std::vector<ModTerm<K>> acc;
    for (const auto& t : syz.terms())
        for (const auto& gt : gens[static_cast<std::size_t>(t.comp)].terms())
            acc.push_back({F.mul(t.c, gt.c), t.m * gt.m, gt.comp});
    return ModElt<K>::from_terms(fm.ring, *ord, std::move(acc));
}

} // namespace drnc::testing

#endif
