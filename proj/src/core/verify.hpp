// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Aggregated verification suites behind the verify-* commands. Each returns a
// Report with one line per checked clause; nothing here prints or exits.
#ifndef DRNC_CORE_VERIFY_HPP
#define DRNC_CORE_VERIFY_HPP

#include "curves.hpp"
#include "plethysm.hpp"

namespace drnc {

// Dispatches a generic callable on the selected coefficient field.
template <class Fn>
decltype(auto) with_field(std::uint32_t characteristic, Fn&& fn) {
    if (characteristic == 0) return fn(QQField{});
    return fn(FpField{characteristic});
}

// Betti tables of rational normal curves match l * C(d, l+1).
template <class K>
Report verify_rnc(const K& field, int dmin, int dmax) {
    Report rep;
    rep.title = "rational normal curves, d = " + std::to_string(dmin) + ".." + std::to_string(dmax);
    if (dmin < 2 || dmax < dmin) fail(Errc::invalid_argument, "verify_rnc: need 2 <= dmin <= dmax");
    for (int d = dmin; d <= dmax; ++d) {
        auto ideal = rnc_ideal(field, d);
        auto res = min_resolution_ideal(ideal);
        BettiTable t = betti(res);
        rep.add("d = " + std::to_string(d) + " Betti table", t == expected_betti_rnc(d).table);
        rep.add("d = " + std::to_string(d) + " differentials compose to zero", composes_to_zero(res));
        rep.add("d = " + std::to_string(d) + " length equals codimension",
                res.length() == static_cast<std::size_t>(d - 1));
    }
    return rep;
}

// Linear re-embedding multiplies the resolution polynomial by (1+xt)^m,
// checked on the corpus {conic, twisted cubic, RNC4, d=2 double curve}.
template <class K>
Report verify_lemma1(const K& field, int max_m = 3) {
    Report rep;
    rep.title = "re-embedding product law";
    std::vector<std::pair<std::string, Ideal<K>>> corpus;
    corpus.emplace_back("conic", rnc_ideal(field, 2));
    corpus.emplace_back("twisted cubic", rnc_ideal(field, 3));
    corpus.emplace_back("rnc4", rnc_ideal(field, 4));
    corpus.emplace_back("double curve d=2",
                        ferrand_double_ideal(field, DoublingSpec<K>{2, -1, {}}));
    for (auto& [name, ideal] : corpus) {
        ResPoly base = res_poly(betti(min_resolution_ideal(ideal)));
        for (int m = 1; m <= max_m; ++m) {
            ResPoly got = res_poly(betti(min_resolution_ideal(linear_embed(ideal, m))));
            ResPoly want = res_poly_mul(base, ResPoly::linear_factor_pow(m));
            rep.add(name + ", m = " + std::to_string(m), got == want);
        }
    }
    return rep;
}

namespace detail {

// Ideal of distinct seeded random points in the projective space of `ring`.
template <class K>
Ideal<K> random_points_ideal(const RingPtr<K>& ring, int count, std::uint64_t seed) {
    const K& F = ring->field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 4096);
    Ideal<K> acc{ring, {}};
    for (int p = 0; p < count; ++p) {
        std::vector<typename K::Elt> coords;
        for (std::size_t v = 0; v < ring->nvars(); ++v) coords.push_back(F.from_long(dist(rng)));
        std::vector<Poly<K>> lin;
        for (std::size_t v = 1; v < ring->nvars(); ++v)
            lin.push_back(Poly<K>::variable(ring, v) -
                          Poly<K>::variable(ring, 0).scaled(F.div(coords[v], coords[0])));
        Ideal<K> pt{ring, std::move(lin)};
        acc = p == 0 ? pt : intersect_ideals(acc, pt);
    }
    return acc;
}

} // namespace detail

// Koszul non-vanishing instance: a scheme of 4 double points and 2 simple
// points on the d = 2 double curve has beta_{3,4} != 0, while a seeded
// 9-point general configuration in P^4 has beta_{3,4} = 0.
template <class K>
Report verify_castelnuovo(const K& field, std::uint64_t seed = 2026) {
    Report rep;
    rep.title = "strong Castelnuovo instance, d = 2";
    auto scheme = points_scheme_ideal(field, 2, {{1, 3}, {1, 4}}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    rep.add("scheme on the double curve has beta_{3,4} != 0", koszul_nonvanishing(scheme, 3));
    auto h = hilbert(scheme);
    rep.add("scheme length is 10", h.hilbert_polynomial == std::vector<BigRat>{BigRat(10)},
            "H(t) = " + h.polynomial_text());

    auto general = detail::random_points_ideal(make_ring(field, z_names(5)), 9, seed);
    rep.add("9 general points in P^4 have beta_{3,4} = 0 (seed " + std::to_string(seed) + ")",
            !koszul_nonvanishing(general, 3));
    return rep;
}

// Recurrence value against the character oracle, plus dimension conservation.
inline Report plethysm_verify(int dim_v, int t, int d) {
    Report rep;
    rep.title = "plethysm S^" + std::to_string(t) + "(S^" + std::to_string(d) + "), dim V = " +
                std::to_string(dim_v);
    Decomp rec;
    Decomp oracle;
    if (dim_v == 2) {
        rec = sym_sym_dim2(t, d);
        oracle = sl_reduce(sym_sym_oracle(t, d, 2));
    } else if (dim_v == 3 && d == 2) {
        rec = sym_sym_recurrence(t, RecurrenceBase::dim3_deg2);
        oracle = sym_sym_oracle(t, 2, 3);
    } else if (dim_v == 3 && d == 3) {
        rec = sym_sym_recurrence(t, RecurrenceBase::dim3_deg3);
        oracle = sym_sym_oracle(t, 3, 3);
    } else if (dim_v == 4 && d == 2) {
        rec = sym_sym_recurrence(t, RecurrenceBase::dim4_deg2);
        oracle = sym_sym_oracle(t, 2, 4);
    } else {
        fail(Errc::invalid_argument,
             "plethysm recurrences cover dim 2 (any d), dim 3 (d = 2, 3), dim 4 (d = 2)");
    }
    rep.add("recurrence equals character oracle", rec == oracle,
            "recurrence " + decomp_text(rec) + "; oracle " + decomp_text(oracle));
    std::int64_t want = sym_sym_total_dim(t, d, dim_v);
    rep.add("dimension conservation", rec.dimension() == want,
            std::to_string(rec.dimension()) + " vs " + std::to_string(want));
    return rep;
}

// The recurrence-based decomposition behind the `plethysm` command.
inline Decomp plethysm_value(int dim_v, int t, int d) {
    if (dim_v == 2) return sym_sym_dim2(t, d);
    if (dim_v == 3 && d == 2) return sym_sym_recurrence(t, RecurrenceBase::dim3_deg2);
    if (dim_v == 3 && d == 3) return sym_sym_recurrence(t, RecurrenceBase::dim3_deg3);
    if (dim_v == 4 && d == 2) return sym_sym_recurrence(t, RecurrenceBase::dim4_deg2);
    fail(Errc::invalid_argument,
         "plethysm recurrences cover dim 2 (any d), dim 3 (d = 2, 3), dim 4 (d = 2)");
}

} // namespace drnc

#endif
