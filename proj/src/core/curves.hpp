// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Generators for rational normal curves, Veronese images, linear
// re-embeddings, Ferrand doublings through a square-zero parametrization,
// twist module presentations, point/double-point subschemes, the closed-form
// expected Betti tables, and the double-curve verification checks.
#ifndef DRNC_CORE_CURVES_HPP
#define DRNC_CORE_CURVES_HPP

#include <random>

#include "report.hpp"
#include "resolve.hpp"

namespace drnc {

// ---------------------------------------------------------------------------
// Expected tables (exact integer closed forms)

struct ExpectedTable {
    enum class Source { rnc, double_curve, twist, veronese_reference };
    Source source;
    int d = 0;
    int j = 0;
    std::string name;
    BettiTable table;
    bool reference_only = false;   // never used in assertions
    bool has_suspect_entry = false;
    std::string suspect_note;
};

// Rational normal curve of degree d: beta_{l, l+1} = l * C(d, l+1).
inline ExpectedTable expected_betti_rnc(int d) {
    if (d < 1) fail(Errc::invalid_argument, "expected_betti_rnc: d >= 1");
    ExpectedTable e{ExpectedTable::Source::rnc, d, 0, "rnc(" + std::to_string(d) + ")", {}, false, false, ""};
    e.table.add(0, 0, 1);
    for (int l = 1; l <= d - 1; ++l) e.table.add(l, l + 1, l * binomial(d, l + 1));
    return e;
}

// Double curve on the degree-d RNC in P^{2d}: the table of a degree-2d RNC.
inline ExpectedTable expected_betti_double(int d) {
    if (d < 1) fail(Errc::invalid_argument, "expected_betti_double: d >= 1");
    ExpectedTable e = expected_betti_rnc(2 * d);
    e.source = ExpectedTable::Source::double_curve;
    e.d = d;
    e.name = "double(" + std::to_string(d) + ")";
    return e;
}

// Modules T^j on the degree-d RNC, 1 <= j <= d-1.
inline ExpectedTable expected_betti_twist(int d, int j) {
    if (d < 2 || j < 1 || j > d - 1) fail(Errc::invalid_argument, "expected_betti_twist: need 1 <= j <= d-1");
    ExpectedTable e{ExpectedTable::Source::twist, d, j,
                    "twist(" + std::to_string(d) + "," + std::to_string(j) + ")", {}, false, false, ""};
    if (j == d - 1) {
        for (int i = 0; i <= d - 1; ++i) e.table.add(i, i, (d - i) * binomial(d, i));
    } else {
        e.table.add(0, 0, j + 1);
        for (int i = 1; i <= j; ++i) e.table.add(i, i, (j - i + 1) * binomial(d, i));
        for (int k = 1; k <= d - j - 1; ++k) e.table.add(j + k, j + k + 1, k * binomial(d, j + k + 1));
    }
    return e;
}

// Reference table for v4(P^2) in P^14, stored as data only. The (2,3) entry
// is flagged as suspect (it disagrees with published values) and no
// assertion may depend on it.
inline ExpectedTable veronese_reference_table(const std::string& name) {
    if (name != "v4_P2") fail(Errc::invalid_argument, "unknown reference table: " + name);
    ExpectedTable e{ExpectedTable::Source::veronese_reference, 4, 0, name, {}, true, true,
                    "entry (2,3) = 5360 is suspect; reference only"};
    e.table.add(0, 0, 1);
    const std::int64_t linear[] = {75, 5360, 1947, 4488, 7095, 7920, 6237, 3344, 1089};
    for (int i = 0; i < 9; ++i) e.table.add(i + 1, i + 2, linear[i]);
    e.table.add(10, 11, 120);
    e.table.add(10, 12, 55);
    e.table.add(11, 13, 24);
    e.table.add(12, 14, 3);
    return e;
}

// ---------------------------------------------------------------------------
// Generators

inline std::vector<std::string> double_ring_names(int d) {
    // the degree-2 case uses the classical letters; everything else z0..z_{2d}
    if (d == 2) return {"x", "y", "z", "u", "v"};
    return z_names(static_cast<std::size_t>(2 * d) + 1);
}

// 2x2 minors of the Hankel matrix [[z0..z_{d-1}],[z1..z_d]]: C(d,2) quadrics.
template <class K>
Ideal<K> rnc_ideal(const K& field, int d) {
    if (d < 1) fail(Errc::invalid_argument, "rnc_ideal: d >= 1");
    RingPtr<K> ring = make_ring(field, z_names(static_cast<std::size_t>(d) + 1));
    std::vector<Poly<K>> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto zi = Poly<K>::variable(ring, static_cast<std::size_t>(i));
            auto zj1 = Poly<K>::variable(ring, static_cast<std::size_t>(j) + 1);
            auto zi1 = Poly<K>::variable(ring, static_cast<std::size_t>(i) + 1);
            auto zj = Poly<K>::variable(ring, static_cast<std::size_t>(j));
            gens.push_back(zi * zj1 - zi1 * zj);
        }
    return Ideal<K>{ring, std::move(gens)};
}

// Same generators in n+1+m variables plus the m new variables as linear
// generators: the ideal of X inside the larger projective space.
template <class K>
Ideal<K> linear_embed(const Ideal<K>& ideal, int m) {
    if (m < 0) fail(Errc::invalid_argument, "linear_embed: m >= 0");
    if (m == 0) return ideal;
    std::vector<std::string> names = ideal.ring->names();
    for (int k = 0; k < m; ++k) {
        std::string nn = "w" + std::to_string(k);
        if (std::find(names.begin(), names.end(), nn) != names.end())
            fail(Errc::invalid_argument, "linear_embed: name clash with " + nn);
        names.push_back(nn);
    }
    RingPtr<K> big = make_ring(ideal.ring->field(), names, ideal.ring->order());
    const std::size_t n0 = ideal.ring->nvars();
    std::vector<Poly<K>> gens;
    for (const auto& p : ideal.gens) {
        std::vector<typename Poly<K>::Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<Expo> e(names.size(), 0);
            for (std::size_t v = 0; v < n0; ++v) e[v] = t.m[v];
            ts.push_back({Monomial(std::move(e)), t.c});
        }
        gens.push_back(Poly<K>::from_terms(big, std::move(ts)));
    }
    for (int k = 0; k < m; ++k) gens.push_back(Poly<K>::variable(big, n0 + static_cast<std::size_t>(k)));
    return Ideal<K>{big, std::move(gens)};
}

namespace detail {

// Degree-by-degree membership assertion that the degree-2 part generates.
template <class K>
std::vector<Poly<K>> quadratic_generators(const RingPtr<K>& ring, const std::vector<Poly<K>>& kernel,
                                          const char* what) {
    std::vector<Poly<K>> quadrics;
    for (const auto& p : kernel)
        if (p.degree() == 2) quadrics.push_back(p);
    GroebnerBasis<K> gb = buchberger_ideal(Ideal<K>{ring, quadrics});
    for (const auto& p : kernel)
        if (!normal_form(p, gb).is_zero())
            fail(Errc::verify, std::string(what) + ": kernel is not generated by quadrics");
    return quadrics;
}

} // namespace detail

// Toric kernel of z_alpha -> x^alpha over all degree-d exponents alpha,
// computed via elim_kernel; generated by quadrics (asserted).
template <class K>
Ideal<K> veronese_ideal(const K& field, int n, int d) {
    if (n < 1 || n > 3 || d < 1) fail(Errc::invalid_argument, "veronese_ideal: need n in {1,2,3}, d >= 1");
    std::int64_t N = binomial(n + d, n);
    if (N > 21) fail(Errc::guard, "veronese_ideal: C(n+d,n) <= 21 exceeded");

    std::vector<std::string> xnames;
    for (int i = 0; i <= n; ++i) xnames.push_back("x" + std::to_string(i));
    RingPtr<K> aux = make_ring(field, xnames);

    // exponents in descending lexicographic order, matching z_i -> s^{d-i} t^i
    std::vector<Monomial> alphas;
    std::vector<Expo> cur(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(std::size_t, int)> gen = [&](std::size_t v, int left) {
        if (v == static_cast<std::size_t>(n)) {
            cur[v] = static_cast<Expo>(left);
            alphas.emplace_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = static_cast<Expo>(e);
            gen(v + 1, left - e);
        }
    };
    gen(0, d);

    std::vector<Poly<K>> images;
    for (const auto& a : alphas) images.push_back(Poly<K>::monomial(aux, a, field.one()));
    RingPtr<K> Z = make_ring(field, z_names(static_cast<std::size_t>(N)));
    auto kernel = elim_kernel<K>(images, {}, Z);
    return Ideal<K>{Z, detail::quadratic_generators(Z, kernel, "veronese_ideal")};
}

// ---------------------------------------------------------------------------
// Ferrand doubling

template <class K>
struct DoublingSpec {
    int d = 1;
    int twist_degree = -1; // the only admissible value
    std::optional<std::vector<std::vector<typename K::Elt>>> basis_matrix;
};

namespace detail {

template <class K>
bool invertible(const K& F, const std::vector<std::vector<typename K::Elt>>& m) {
    std::size_t n = m.size();
    auto a = m;
    for (auto& row : a)
        if (row.size() != n) return false;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && F.is_zero(a[piv][col])) ++piv;
        if (piv == n) return false;
        std::swap(a[rank], a[piv]);
        auto inv = F.inv(a[rank][col]);
        for (auto& x : a[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            auto f = a[r][col];
            if (F.is_zero(f)) continue;
            for (std::size_t c = 0; c < n; ++c) a[r][c] = F.sub(a[r][c], F.mul(f, a[rank][c]));
        }
        ++rank;
    }
    return rank == n;
}

// Kernel of the square-zero parametrization with the epsilon block given by
// degree-delta forms; delta = d-1 realizes the Ferrand doubling with
// L = O(-1), delta = d-2 is the negative control with L = O(-2).
template <class K>
Ideal<K> double_curve_kernel(const K& field, int d, int delta,
                             const std::optional<std::vector<std::vector<typename K::Elt>>>& basis) {
    if (d < 1 || delta < 0 || delta > d - 1)
        fail(Errc::invalid_argument, "double_curve_kernel: need 0 <= delta <= d-1");
    const int ne = delta + 1; // number of epsilon coordinates
    RingPtr<K> aux = make_ring(field, {"s", "t", "e"});
    auto s = Poly<K>::variable(aux, 0);
    auto t = Poly<K>::variable(aux, 1);
    auto e = Poly<K>::variable(aux, 2);

    std::vector<Poly<K>> images;
    for (int i = 0; i <= d; ++i) {
        Monomial m(3);
        m.set(0, static_cast<Expo>(d - i));
        m.set(1, static_cast<Expo>(i));
        images.push_back(Poly<K>::monomial(aux, m, field.one()));
    }
    // v_k = s^k t^(delta-k); row j of the basis matrix selects the form for
    // the j-th epsilon coordinate (identity: z_{d+1+j} -> s^j t^(delta-j) e)
    std::vector<Poly<K>> vforms;
    for (int k = 0; k <= delta; ++k) {
        Monomial m(3);
        m.set(0, static_cast<Expo>(k));
        m.set(1, static_cast<Expo>(delta - k));
        m.set(2, 1);
        vforms.push_back(Poly<K>::monomial(aux, m, field.one()));
    }
    if (basis) {
        if (static_cast<int>(basis->size()) != ne) fail(Errc::invalid_argument, "basis matrix size mismatch");
        if (!invertible(field, *basis)) fail(Errc::invalid_argument, "singular basis matrix");
        for (int j = 0; j < ne; ++j) {
            Poly<K> comb = Poly<K>::zero(aux);
            for (int k = 0; k <= delta; ++k)
                comb = comb + vforms[static_cast<std::size_t>(k)].scaled((*basis)[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
            images.push_back(comb);
        }
    } else {
        for (int j = 0; j <= delta; ++j) images.push_back(vforms[static_cast<std::size_t>(j)]);
    }

    std::vector<std::string> names =
        delta == d - 1 ? double_ring_names(d) : z_names(static_cast<std::size_t>(d + 1 + ne));
    RingPtr<K> Z = make_ring(field, names);
    auto kernel = elim_kernel<K>(images, {e * e}, Z);
    return Ideal<K>{Z, std::move(kernel)};
}

} // namespace detail

// Generators of the Ferrand doubling of the degree-d RNC in P^{2d}; the ideal
// is generated in degree 2 (asserted).
template <class K>
Ideal<K> ferrand_double_ideal(const K& field, const DoublingSpec<K>& spec) {
    if (spec.d < 1) fail(Errc::invalid_argument, "ferrand_double_ideal: d >= 1");
    if (spec.twist_degree != -1)
        fail(Errc::invalid_argument, "ferrand_double_ideal: only the twist degree -1 admits linear syzygies");
    Ideal<K> kernel = detail::double_curve_kernel(field, spec.d, spec.d - 1, spec.basis_matrix);
    return Ideal<K>{kernel.ring,
                    detail::quadratic_generators(kernel.ring, kernel.gens, "ferrand_double_ideal")};
}

// Negative control: the analogous kernel with the epsilon block paired
// against forms of degree d-2 (the would-be O(-2) doubling in P^{2d-1}).
template <class K>
Ideal<K> double_curve_negative_control(const K& field, int d) {
    if (d < 2) fail(Errc::invalid_argument, "double_curve_negative_control: d >= 2");
    return detail::double_curve_kernel(field, d, d - 2,
                                       std::optional<std::vector<std::vector<typename K::Elt>>>{});
}

// The ideal of X = RNC(d) inside the ambient ring of its doubling.
template <class K>
Ideal<K> rnc_in_double_ring(const RingPtr<K>& double_ring, int d) {
    std::vector<Poly<K>> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto zi = Poly<K>::variable(double_ring, static_cast<std::size_t>(i));
            auto zj1 = Poly<K>::variable(double_ring, static_cast<std::size_t>(j) + 1);
            auto zi1 = Poly<K>::variable(double_ring, static_cast<std::size_t>(i) + 1);
            auto zj = Poly<K>::variable(double_ring, static_cast<std::size_t>(j));
            gens.push_back(zi * zj1 - zi1 * zj);
        }
    for (std::size_t v = static_cast<std::size_t>(d) + 1; v < double_ring->nvars(); ++v)
        gens.push_back(Poly<K>::variable(double_ring, v));
    return Ideal<K>{double_ring, std::move(gens)};
}

// I_X^2 <= J <= I_X plus the graded dimension identity dim (I/J)_l = d*l.
template <class K>
Report check_double_exact_sequences(const K& field, int d, int max_degree = 6) {
    Report rep;
    rep.title = "exact sequences, d = " + std::to_string(d);
    Ideal<K> J = ferrand_double_ideal(field, DoublingSpec<K>{d, -1, {}});
    Ideal<K> I = rnc_in_double_ring(J.ring, d);
    GroebnerBasis<K> gbI = buchberger_ideal(I);
    GroebnerBasis<K> gbJ = buchberger_ideal(J);

    bool j_in_i = true;
    for (const auto& g : J.gens)
        if (!normal_form(g, gbI).is_zero()) j_in_i = false;
    rep.add("J contained in I", j_in_i);

    bool i2_in_j = true;
    for (std::size_t a = 0; a < I.gens.size() && i2_in_j; ++a)
        for (std::size_t b = a; b < I.gens.size(); ++b)
            if (!normal_form(I.gens[a] * I.gens[b], gbJ).is_zero()) {
                i2_in_j = false;
                break;
            }
    rep.add("I^2 contained in J", i2_in_j);

    for (int l = 0; l <= max_degree; ++l) {
        std::int64_t got = quotient_dim(gbJ, static_cast<std::size_t>(l)) -
                           quotient_dim(gbI, static_cast<std::size_t>(l));
        std::int64_t want = l == 0 ? 0 : static_cast<std::int64_t>(d) * l;
        rep.add("dim (I/J)_" + std::to_string(l) + " = " + std::to_string(want), got == want,
                "got " + std::to_string(got));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Twist modules

// Presentation of the module of sections of T^j on the degree-d RNC:
// generators are the degree-j monomials in s, t; relations are the kernel of
// the evaluation into k[s,t], computed by module elimination.
template <class K>
std::pair<FreeMod<K>, std::vector<ModElt<K>>> twist_module_presentation(const K& field, int d, int j) {
    if (d < 2 || d > 4 || j < 1 || j > d - 1)
        fail(Errc::guard, "twist_module_presentation: need 1 <= j <= d-1 and d <= 4");

    std::vector<std::string> names{"s", "t"};
    for (auto& zn : z_names(static_cast<std::size_t>(d) + 1)) names.push_back(zn);
    std::vector<std::uint32_t> weights(2, 1);
    weights.insert(weights.end(), static_cast<std::size_t>(d) + 1, static_cast<std::uint32_t>(d));
    RingPtr<K> A = make_ring(field, names, MonomialOrder::block_elim(2), weights);

    // columns of the map A^{j+1} + A^{d+1} -> A
    FreeMod<K> target{A, {0}};
    std::vector<ModElt<K>> cols;
    std::vector<std::int64_t> shifts;
    for (int k = 0; k <= j; ++k) {
        Monomial m(A->nvars());
        m.set(0, static_cast<Expo>(j - k));
        m.set(1, static_cast<Expo>(k));
        cols.push_back(poly_to_modelt(Poly<K>::monomial(A, m, field.one())));
        shifts.push_back(j);
    }
    for (int i = 0; i <= d; ++i) {
        Monomial zi(A->nvars());
        zi.set(static_cast<std::size_t>(2 + i), 1);
        Monomial img(A->nvars());
        img.set(0, static_cast<Expo>(d - i));
        img.set(1, static_cast<Expo>(i));
        cols.push_back(poly_to_modelt(Poly<K>::monomial(A, zi, field.one()) -
                                      Poly<K>::monomial(A, img, field.one())));
        shifts.push_back(d);
    }
    auto kernel = kernel_of_module_map(target, cols, shifts);

    // project to the h-block and eliminate s, t from the resulting submodule
    FreeMod<K> hmod{A, std::vector<std::int64_t>(static_cast<std::size_t>(j) + 1, j)};
    std::vector<ModElt<K>> hgens;
    for (const auto& k : kernel) {
        std::vector<ModTerm<K>> ts;
        for (const auto& t : k.terms())
            if (t.comp <= j) ts.push_back(t);
        if (!ts.empty())
            hgens.push_back(ModElt<K>::from_terms(A, TOPOrder(ring_order(*A)), std::move(ts)));
    }
    auto top = std::make_shared<TOPOrder>(ring_order(*A));
    GroebnerBasis<K> gb = buchberger(hmod, hgens, top);

    RingPtr<K> R = make_ring(field, z_names(static_cast<std::size_t>(d) + 1));
    FreeMod<K> out_mod{R, std::vector<std::int64_t>(static_cast<std::size_t>(j) + 1, 0)};
    auto pot = std::make_shared<POTOrder>(ring_order(*R));
    std::vector<ModElt<K>> out;
    for (const auto& g : gb.gens) {
        if (g.lead().m[0] != 0 || g.lead().m[1] != 0) continue;
        std::vector<ModTerm<K>> ts;
        for (const auto& t : g.terms()) {
            if (t.m[0] != 0 || t.m[1] != 0) fail(Errc::internal, "twist presentation: elimination violated");
            std::vector<Expo> e(R->nvars());
            for (std::size_t v = 0; v < R->nvars(); ++v) e[v] = t.m[v + 2];
            ts.push_back({t.c, Monomial(std::move(e)), t.comp});
        }
        out.push_back(ModElt<K>::from_terms(R, *pot, std::move(ts)));
    }
    out = minimal_generators(out_mod, std::move(out), pot);
    return {out_mod, std::move(out)};
}

// ---------------------------------------------------------------------------
// Points and double points on the double curve

// Reduced Groebner generators of the intersection of two homogeneous ideals.
template <class K>
Ideal<K> intersect_ideals(const Ideal<K>& I, const Ideal<K>& J) {
    require_same_ring(I.ring, J.ring);
    const RingPtr<K>& ring = I.ring;
    FreeMod<K> target{ring, {0, 0}};
    std::vector<ModElt<K>> cols;
    std::vector<std::int64_t> shifts;
    {
        std::vector<ModTerm<K>> diag{{ring->field().one(), Monomial(ring->nvars()), 0},
                                     {ring->field().one(), Monomial(ring->nvars()), 1}};
        auto pot = POTOrder(ring_order(*ring));
        cols.push_back(ModElt<K>::from_terms(ring, pot, std::move(diag)));
        shifts.push_back(0);
    }
    for (const auto& g : I.gens) {
        cols.push_back(poly_to_modelt(g, 0));
        shifts.push_back(static_cast<std::int64_t>(g.degree()));
    }
    for (const auto& h : J.gens) {
        cols.push_back(poly_to_modelt(h, 1));
        shifts.push_back(static_cast<std::int64_t>(h.degree()));
    }
    auto kernel = kernel_of_module_map(target, cols, shifts);
    std::vector<Poly<K>> gens;
    for (const auto& k : kernel) {
        Poly<K> f = k.component(ring, 0);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    auto gb = buchberger_ideal(Ideal<K>{ring, gens});
    auto polys = gb.gens_as_polys();
    presentation_normalize(polys);
    return Ideal<K>{ring, std::move(polys)};
}

// The subscheme of the default double curve Y consisting of reduced points of
// X at the simple parameters and length-2 subschemes of Y at the double
// parameters; all ideals are built in the ambient ring of Y.
template <class K>
Ideal<K> points_scheme_ideal(const K& field, int d,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& simple_params,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& double_params) {
    if (d < 1) fail(Errc::invalid_argument, "points_scheme_ideal: d >= 1");

    std::vector<std::pair<typename K::Elt, typename K::Elt>> all;
    for (auto& [a, b] : simple_params) all.push_back({field.from_long(a), field.from_long(b)});
    for (auto& [a, b] : double_params) all.push_back({field.from_long(a), field.from_long(b)});
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (field.is_zero(all[i].first) && field.is_zero(all[i].second))
            fail(Errc::invalid_argument, "points_scheme_ideal: (0:0) is not a projective point");
        for (std::size_t k = i + 1; k < all.size(); ++k) {
            auto cross = field.sub(field.mul(all[i].first, all[k].second),
                                   field.mul(all[i].second, all[k].first));
            if (field.is_zero(cross))
                fail(Errc::invalid_argument, "points_scheme_ideal: repeated parameter values");
        }
    }

    Ideal<K> J = ferrand_double_ideal(field, DoublingSpec<K>{d, -1, {}});
    const RingPtr<K>& ring = J.ring;
    const std::size_t nv = ring->nvars();

    auto pow = [&](const typename K::Elt& x, int e) {
        auto r = field.one();
        for (int i = 0; i < e; ++i) r = field.mul(r, x);
        return r;
    };

    std::vector<Ideal<K>> pieces;
    for (auto& [a0, b0] : simple_params) {
        auto a = field.from_long(a0), b = field.from_long(b0);
        // coordinates of the reduced point: z_i = a^{d-i} b^i, epsilon block 0
        std::vector<typename K::Elt> p(nv, field.zero());
        for (int i = 0; i <= d; ++i) p[static_cast<std::size_t>(i)] = field.mul(pow(a, d - i), pow(b, i));
        std::size_t pivot = 0;
        while (pivot < nv && field.is_zero(p[pivot])) ++pivot;
        std::vector<Poly<K>> lin;
        for (std::size_t v = 0; v < nv; ++v) {
            if (v == pivot) continue;
            lin.push_back(Poly<K>::variable(ring, v) -
                          Poly<K>::variable(ring, pivot).scaled(field.div(p[v], p[pivot])));
        }
        pieces.push_back(Ideal<K>{ring, std::move(lin)});
    }
    for (auto& [a0, b0] : double_params) {
        auto a = field.from_long(a0), b = field.from_long(b0);
        // kernel of the parametrization modulo (e^2, b s - a t)
        RingPtr<K> aux = make_ring(field, {"s", "t", "e"});
        auto s = Poly<K>::variable(aux, 0);
        auto t = Poly<K>::variable(aux, 1);
        auto e = Poly<K>::variable(aux, 2);
        std::vector<Poly<K>> images;
        for (int i = 0; i <= d; ++i) {
            Monomial m(3);
            m.set(0, static_cast<Expo>(d - i));
            m.set(1, static_cast<Expo>(i));
            images.push_back(Poly<K>::monomial(aux, m, field.one()));
        }
        for (int j = 0; j <= d - 1; ++j) {
            Monomial m(3);
            m.set(0, static_cast<Expo>(j));
            m.set(1, static_cast<Expo>(d - 1 - j));
            m.set(2, 1);
            images.push_back(Poly<K>::monomial(aux, m, field.one()));
        }
        RingPtr<K> Zl = make_ring(field, ring->names());
        auto ker = elim_kernel<K>(images, {e * e, s.scaled(b) - t.scaled(a)}, Zl);
        pieces.push_back(Ideal<K>{ring, std::move(ker)});
    }
    if (pieces.empty()) fail(Errc::invalid_argument, "points_scheme_ideal: no points given");

    Ideal<K> acc = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) acc = intersect_ideals(acc, pieces[i]);
    return acc;
}

// beta_{p, p+1} != 0 in the minimal resolution of the quotient ring.
template <class K>
bool koszul_nonvanishing(const Ideal<K>& ideal, int p_index) {
    require_homogeneous(ideal.gens, "koszul_nonvanishing");
    auto res = min_resolution_ideal(ideal);
    return betti(res).at(p_index, p_index + 1) != 0;
}

// ---------------------------------------------------------------------------
// Verification

template <class K>
Report verify_double_curve(const K& field, int d,
                           const std::optional<std::vector<std::vector<typename K::Elt>>>& basis = {},
                           int exact_seq_max_degree = 6) {
    Report rep;
    rep.title = "double curve, d = " + std::to_string(d);
    Ideal<K> J = ferrand_double_ideal(field, DoublingSpec<K>{d, -1, basis});

    bool all_quadrics = !J.gens.empty();
    for (const auto& g : J.gens)
        if (g.degree() != 2) all_quadrics = false;
    rep.add("(a) minimal generators in degree 2", all_quadrics,
            std::to_string(J.gens.size()) + " generators");

    auto res = min_resolution_ideal(J);
    BettiTable t = betti(res);
    rep.add("(b) Betti table matches l*C(2d,l+1)", t == expected_betti_double(d).table);

    auto h = hilbert(J);
    std::vector<BigRat> want{BigRat(1), BigRat(2L * d)};
    rep.add("(c) Hilbert polynomial is " + std::to_string(2 * d) + "*t + 1",
            h.hilbert_polynomial == want, "got " + h.polynomial_text());

    rep.add("(d) resolution is strictly linear", t.strictly_linear());

    Report seq = check_double_exact_sequences(field, d, exact_seq_max_degree);
    rep.add("(e) exact sequence checks", seq.pass());
    rep.merge(seq);

    GroebnerBasis<K> gbJ = buchberger_ideal(J);
    rep.add("(f) not contained in a hyperplane",
            quotient_dim(gbJ, 1) == static_cast<std::int64_t>(J.ring->nvars()));
    return rep;
}

// Seeded invertible matrix over the field, for basis-change equivariance.
template <class K>
std::vector<std::vector<typename K::Elt>> random_invertible_matrix(const K& field, int n,
                                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-50, 50);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<typename K::Elt>> m(static_cast<std::size_t>(n));
        for (auto& row : m) {
            row.clear();
            for (int c = 0; c < n; ++c) row.push_back(field.from_long(dist(rng)));
        }
        if (detail::invertible(field, m)) return m;
    }
    fail(Errc::internal, "could not draw an invertible matrix");
}

} // namespace drnc

#endif
