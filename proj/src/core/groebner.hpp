// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Buchberger's algorithm for submodules of graded free modules, normal forms,
// Schreyer syzygies, kernels of module maps, and elimination kernels of
// graded ring maps. Everything is restricted to homogeneous input and is
// deterministic for a fixed input order: pairs are selected by degree, ties
// by creation sequence.
#ifndef DRNC_CORE_GROEBNER_HPP
#define DRNC_CORE_GROEBNER_HPP

#include <algorithm>
#include <deque>
#include <optional>

#include "modelt.hpp"

namespace drnc {

template <class K>
struct Ideal {
    RingPtr<K> ring;
    std::vector<Poly<K>> gens;
};

template <class K>
struct GroebnerBasis {
    FreeMod<K> ambient;
    ModOrderPtr order;
    std::vector<ModElt<K>> gens;
    bool reduced = false;

    std::vector<Poly<K>> gens_as_polys() const {
        std::vector<Poly<K>> out;
        out.reserve(gens.size());
        for (const auto& g : gens) out.push_back(g.component(ambient.ring, 0));
        return out;
    }
};

// ---------------------------------------------------------------------------
// Division

// Fully reduces f modulo gens: no term of the result is divisible by any lead
// term. If `quotients` is given, records f = sum(quotients[k] * gens[k]) + r.
template <class K>
ModElt<K> reduce_full(const ModElt<K>& f, const std::vector<ModElt<K>>& gens, const ModOrder& ord,
                      const RingPtr<K>& ring, std::vector<Poly<K>>* quotients = nullptr) {
    const K& F = ring->field();
    std::vector<std::vector<typename Poly<K>::Term>> qacc;
    if (quotients) qacc.resize(gens.size());

    ModElt<K> h = f;
    std::vector<ModTerm<K>> remainder;
    while (!h.is_zero()) {
        const ModTerm<K>& lt = h.lead();
        bool divided = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const auto& g = gens[k];
            if (g.is_zero()) continue;
            const ModTerm<K>& gl = g.lead();
            if (gl.comp != lt.comp || !gl.m.divides(lt.m)) continue;
            Monomial q = lt.m.quotient_by(gl.m);
            typename K::Elt c = F.div(lt.c, gl.c);
            if (quotients) qacc[k].push_back({q, c});
            h = ModElt<K>::axpy(F, ord, h, c, q, g);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.push_back(lt);
            auto terms = h.terms();
            terms.erase(terms.begin());
            h = ModElt<K>::from_sorted(std::move(terms));
        }
    }
    if (quotients) {
        quotients->clear();
        for (auto& ts : qacc) quotients->push_back(Poly<K>::from_terms(ring, std::move(ts)));
    }
    return ModElt<K>::from_sorted(std::move(remainder));
}

template <class K>
ModElt<K> normal_form(const ModElt<K>& f, const GroebnerBasis<K>& gb) {
    return reduce_full(f, gb.gens, *gb.order, gb.ambient.ring);
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    require_same_ring(f.ring(), gb.ambient.ring);
    if (gb.ambient.rank() != 1) fail(Errc::invalid_argument, "polynomial normal form needs a rank-1 module");
    return reduce_full(poly_to_modelt(f), gb.gens, *gb.order, gb.ambient.ring).component(gb.ambient.ring, 0);
}

// ---------------------------------------------------------------------------
// Buchberger

namespace detail {

struct SPair {
    std::size_t i, j;
    Monomial lcm_m;
    std::int32_t comp;
    std::int64_t degree;
    std::uint64_t seq;
};

template <class K>
void push_pairs(std::deque<SPair>& pairs, const std::vector<ModElt<K>>& G, std::size_t j,
                const FreeMod<K>& fm, std::uint64_t& seq) {
    bool rank1 = fm.rank() == 1;
    const auto& lj = G[j].lead();
    for (std::size_t i = 0; i < j; ++i) {
        if (G[i].is_zero()) continue;
        const auto& li = G[i].lead();
        if (li.comp != lj.comp) continue;
        // product criterion (polynomial case only)
        if (rank1 && coprime(li.m, lj.m)) continue;
        Monomial L = lcm(li.m, lj.m);
        pairs.push_back({i, j, L, li.comp, fm.term_degree(L, li.comp), seq++});
    }
}

} // namespace detail

// Reduced Groebner basis of the submodule generated by `gens`. Requires
// homogeneous generators. Output is monic, inter-reduced, and sorted with
// leads descending under the module order.
template <class K>
GroebnerBasis<K> buchberger(const FreeMod<K>& fm, const std::vector<ModElt<K>>& gens,
                            ModOrderPtr order) {
    const RingPtr<K>& ring = fm.ring;
    const K& F = ring->field();
    for (const auto& g : gens)
        if (!g.is_homogeneous(fm)) fail(Errc::inhomogeneous, "buchberger: inhomogeneous input");

    std::vector<ModElt<K>> G;
    std::deque<detail::SPair> pairs;
    std::uint64_t seq = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        // reduce incoming generators so no two basis leads coincide
        ModElt<K> r = reduce_full(g, G, *order, ring);
        if (r.is_zero()) continue;
        G.push_back(r.monic(F));
        detail::push_pairs(pairs, G, G.size() - 1, fm, seq);
    }

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->degree < best->degree || (it->degree == best->degree && it->seq < best->seq))
                best = it;
        detail::SPair p = *best;
        pairs.erase(best);

        const auto& gi = G[p.i];
        const auto& gj = G[p.j];
        if (gi.is_zero() || gj.is_zero()) continue;
        Monomial ui = p.lcm_m.quotient_by(gi.lead().m);
        Monomial uj = p.lcm_m.quotient_by(gj.lead().m);
        ModElt<K> s = ModElt<K>::axpy(F, *order, gi.times_monomial(F, ui, F.one()), F.one(), uj, gj);
        ModElt<K> r = reduce_full(s, G, *order, ring);
        if (!r.is_zero()) {
            G.push_back(r.monic(F));
            detail::push_pairs(pairs, G, G.size() - 1, fm, seq);
        }
    }

    // prune generators with redundant leads; distinct elements of the loop
    // output never share a lead term, so plain divisibility decides
    std::vector<bool> drop(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        const auto& li = G[i].lead();
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const auto& lj = G[j].lead();
            if (lj.comp == li.comp && lj.m.divides(li.m) && lj.m != li.m) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<ModElt<K>> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(G[i]));

    // tail-reduce for canonical form
    std::vector<ModElt<K>> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModElt<K>> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        reduced.push_back(reduce_full(kept[i], others, *order, ring).monic(F));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const ModElt<K>& a, const ModElt<K>& b) {
        return order->cmp(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) > 0;
    });

    return GroebnerBasis<K>{fm, std::move(order), std::move(reduced), true};
}

// Ideal case: rank-1 free module over the generators' ring.
template <class K>
GroebnerBasis<K> buchberger_ideal(const Ideal<K>& ideal) {
    FreeMod<K> fm{ideal.ring, {0}};
    auto order = std::make_shared<POTOrder>(ring_order(*ideal.ring));
    std::vector<ModElt<K>> gens;
    gens.reserve(ideal.gens.size());
    for (const auto& p : ideal.gens) {
        require_same_ring(p.ring(), ideal.ring);
        gens.push_back(poly_to_modelt(p));
    }
    return buchberger(fm, gens, std::move(order));
}

// ---------------------------------------------------------------------------
// Schreyer syzygies

template <class K>
struct SchreyerLevel {
    std::vector<ModElt<K>> syzygies; // elements of the next free module
    FreeMod<K> module;               // that free module (shifts = generator degrees)
    ModOrderPtr order;               // Schreyer order induced by the input basis
};

// One Schreyer step: a Groebner basis of the first syzygy module of `gens`
// (which must be a Groebner basis under `ord`), with leads given by the
// minimal generators of the lead-term colon ideals. The output is a Groebner
// basis under the induced Schreyer order.
template <class K>
SchreyerLevel<K> schreyer_syzygies(const FreeMod<K>& fm, const std::vector<ModElt<K>>& gens,
                                   const ModOrderPtr& ord) {
    const RingPtr<K>& ring = fm.ring;
    const K& F = ring->field();

    std::vector<SchreyerOrder::Lead> leads;
    std::vector<std::int64_t> shifts;
    leads.reserve(gens.size());
    for (const auto& g : gens) {
        leads.push_back({g.lead().m, g.lead().comp});
        shifts.push_back(g.degree(fm));
    }
    FreeMod<K> next{ring, shifts};
    auto next_order = std::make_shared<SchreyerOrder>(leads, ord);

    std::vector<ModElt<K>> syz;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        // minimal generators of < lcm(T_i,T_j)/T_i : j > i, same component >
        std::vector<std::pair<Monomial, std::size_t>> cands;
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (leads[j].comp != leads[i].comp) continue;
            Monomial m = lcm(leads[i].m, leads[j].m).quotient_by(leads[i].m);
            bool dominated = false;
            for (auto& c : cands)
                if (c.first.divides(m)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            std::erase_if(cands, [&](const auto& c) { return m.divides(c.first) && m != c.first; });
            cands.push_back({std::move(m), j});
        }
        std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
            int c = ring->compare(a.first, b.first);
            return c != 0 ? c > 0 : a.second < b.second;
        });

        for (auto& [mi, j] : cands) {
            Monomial L = mi * leads[i].m;
            Monomial mj = L.quotient_by(leads[j].m);
            ModElt<K> s = ModElt<K>::axpy(F, *ord, gens[i].times_monomial(F, mi, F.one()), F.one(),
                                          mj, gens[j]);
            std::vector<Poly<K>> quot;
            ModElt<K> r = reduce_full(s, gens, *ord, ring, &quot);
            if (!r.is_zero()) fail(Errc::internal, "S-pair of a Groebner basis did not reduce to zero");
            std::vector<ModTerm<K>> ts;
            ts.push_back({F.one(), mi, static_cast<std::int32_t>(i)});
            ts.push_back({F.neg(F.one()), mj, static_cast<std::int32_t>(j)});
            for (std::size_t k = 0; k < quot.size(); ++k)
                for (const auto& t : quot[k].terms())
                    ts.push_back({F.neg(t.c), t.m, static_cast<std::int32_t>(k)});
            syz.push_back(ModElt<K>::from_terms(ring, *next_order, std::move(ts)));
        }
    }
    return SchreyerLevel<K>{std::move(syz), std::move(next), std::move(next_order)};
}

// Minimal generating set of a graded submodule from a homogeneous generating
// set: greedy ascending-degree scan with membership tests against the span of
// the accepted elements.
template <class K>
std::vector<ModElt<K>> minimal_generators(const FreeMod<K>& fm, std::vector<ModElt<K>> gens,
                                          const ModOrderPtr& ord) {
    std::stable_sort(gens.begin(), gens.end(), [&](const ModElt<K>& a, const ModElt<K>& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return a.degree(fm) < b.degree(fm);
    });
    std::vector<ModElt<K>> accepted;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!accepted.empty()) {
            GroebnerBasis<K> gb = buchberger(fm, accepted, ord);
            if (normal_form(g, gb).is_zero()) continue;
        }
        accepted.push_back(std::move(g));
    }
    return accepted;
}

// First syzygy module of the generators of a reduced Groebner basis, pruned
// to a minimal generating set.
template <class K>
SchreyerLevel<K> syzygies(const GroebnerBasis<K>& gb) {
    if (!gb.reduced) fail(Errc::invalid_argument, "syzygies: basis must be reduced");
    SchreyerLevel<K> lvl = schreyer_syzygies(gb.ambient, gb.gens, gb.order);
    lvl.syzygies = minimal_generators(lvl.module, std::move(lvl.syzygies), lvl.order);
    return lvl;
}

// ---------------------------------------------------------------------------
// Kernels

// Generators of the kernel of the map R^s -> R^r sending basis element k to
// columns[k]; computed from a Groebner basis of the graph under an order that
// makes the target components dominant.
template <class K>
std::vector<ModElt<K>> kernel_of_module_map(const FreeMod<K>& target,
                                            const std::vector<ModElt<K>>& columns,
                                            const std::vector<std::int64_t>& column_shifts) {
    const RingPtr<K>& ring = target.ring;
    const int r = static_cast<int>(target.rank());
    const std::size_t s = columns.size();
    if (column_shifts.size() != s) fail(Errc::invalid_argument, "column shift count mismatch");

    FreeMod<K> aug{ring, target.shifts};
    aug.shifts.insert(aug.shifts.end(), column_shifts.begin(), column_shifts.end());

    ModOrderPtr inner = std::make_shared<POTOrder>(ring_order(*ring));
    ModOrderPtr order = std::make_shared<PosBlockOrder>(r, inner);

    std::vector<ModElt<K>> gens;
    gens.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<ModTerm<K>> ts;
        for (const auto& t : columns[k].terms()) ts.push_back(t);
        ts.push_back({ring->field().one(), Monomial(ring->nvars()), static_cast<std::int32_t>(r + k)});
        gens.push_back(ModElt<K>::from_terms(ring, *order, std::move(ts)));
    }

    GroebnerBasis<K> gb = buchberger(aug, gens, order);

    std::vector<ModElt<K>> kernel;
    for (const auto& g : gb.gens) {
        if (g.lead().comp < r) continue;
        std::vector<ModTerm<K>> ts;
        for (const auto& t : g.terms()) {
            if (t.comp < r) fail(Errc::internal, "elimination violated in kernel computation");
            ts.push_back({t.c, t.m, t.comp - r});
        }
        kernel.push_back(ModElt<K>::from_sorted(std::move(ts)));
    }
    return kernel;
}

// ---------------------------------------------------------------------------
// Elimination kernel of a graded ring map

namespace detail {

// Positive integer weights on the variables of `ring` making every listed
// polynomial homogeneous and all `equal_degree` polynomials of one common
// degree. Fails if no strictly positive weighting exists.
template <class K>
std::vector<std::uint32_t> consistent_weights(const RingPtr<K>& ring,
                                              const std::vector<Poly<K>>& homogeneous,
                                              const std::vector<Poly<K>>& equal_degree) {
    const std::size_t n = ring->nvars();
    std::vector<std::vector<BigRat>> rows;
    auto add_diff_row = [&](const Monomial& a, const Monomial& b) {
        std::vector<BigRat> row(n, BigRat(0));
        bool nonzero = false;
        for (std::size_t v = 0; v < n; ++v) {
            long d = long(a[v]) - long(b[v]);
            if (d != 0) nonzero = true;
            row[v] = BigRat(d);
        }
        if (nonzero) rows.push_back(std::move(row));
    };
    for (const auto& p : homogeneous)
        for (std::size_t t = 1; t < p.terms().size(); ++t)
            add_diff_row(p.terms()[0].m, p.terms()[t].m);
    for (const auto& p : equal_degree)
        for (std::size_t t = 1; t < p.terms().size(); ++t)
            add_diff_row(p.terms()[0].m, p.terms()[t].m);
    for (std::size_t i = 1; i < equal_degree.size(); ++i) {
        if (equal_degree[i].is_zero() || equal_degree[0].is_zero())
            fail(Errc::invalid_argument, "zero image in graded ring map");
        add_diff_row(equal_degree[0].terms()[0].m, equal_degree[i].terms()[0].m);
    }

    // Gaussian elimination, tracking pivot columns.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        BigRat inv = BigRat(1) / rows[rank][col];
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || rows[r2][col].is_zero()) continue;
            BigRat f = rows[r2][col];
            for (std::size_t c2 = 0; c2 < n; ++c2) rows[r2][c2] = rows[r2][c2] - f * rows[rank][c2];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    // Free variables get weight 1; pivots are determined by back substitution.
    std::vector<BigRat> w(n, BigRat(0));
    for (std::size_t v = 0; v < n; ++v)
        if (!is_pivot[v]) w[v] = BigRat(1);
    for (std::size_t r2 = 0; r2 < rank; ++r2) {
        BigRat acc(0);
        for (std::size_t c = 0; c < n; ++c)
            if (c != pivot_col[r2]) acc = acc + rows[r2][c] * w[c];
        w[pivot_col[r2]] = -acc;
    }

    // scale to positive integers
    BigInt scale(1);
    for (auto& x : w) {
        BigInt d = x.denominator();
        BigInt g, l;
        mpz_gcd(g.raw(), scale.raw(), d.raw());
        mpz_divexact(l.raw(), scale.raw(), g.raw());
        scale = l * d;
    }
    std::vector<std::uint32_t> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        BigRat scaled = w[v] * BigRat(scale, BigInt(1));
        if (!scaled.is_integer() || scaled.sign() <= 0)
            fail(Errc::invalid_argument,
                 "non-graded map: no positive weighting makes the images homogeneous");
        long val = scaled.numerator().to_long();
        if (val <= 0 || val > 1 << 20) fail(Errc::guard, "weighting out of range");
        out[v] = static_cast<std::uint32_t>(val);
    }
    std::uint32_t g = 0;
    for (auto x : out) g = std::gcd(g, x);
    for (auto& x : out) x /= g;
    return out;
}

} // namespace detail

// Generators of the kernel of the graded ring map
//   k[z_0..z_{m-1}] -> (aux ring)/(relations),  z_i |-> images[i],
// computed by a block elimination order on (aux vars | z vars). The source
// ring supplies the z variable names and the target order.
template <class K>
std::vector<Poly<K>> elim_kernel(const std::vector<Poly<K>>& images,
                                 const std::vector<Poly<K>>& relations,
                                 const RingPtr<K>& source_ring) {
    if (images.empty()) fail(Errc::invalid_argument, "elim_kernel: no images");
    if (images.size() != source_ring->nvars())
        fail(Errc::invalid_argument, "elim_kernel: image count does not match source variables");
    RingPtr<K> aux = images[0].ring();
    for (const auto& p : images) {
        require_same_ring(p.ring(), aux);
        if (p.is_zero()) fail(Errc::invalid_argument, "elim_kernel: zero image");
    }
    for (const auto& p : relations) require_same_ring(p.ring(), aux);

    std::vector<std::uint32_t> aux_w = detail::consistent_weights(aux, relations, images);
    const std::size_t na = aux->nvars();
    const std::size_t nz = source_ring->nvars();

    std::uint64_t image_degree = images[0].terms()[0].m.weighted_degree(aux_w);
    for (const auto& p : images)
        if (p.is_zero() || p.terms()[0].m.weighted_degree(aux_w) != image_degree)
            fail(Errc::invalid_argument, "elim_kernel: images of unequal weighted degree");
    if (image_degree == 0 || image_degree > 1 << 16) fail(Errc::guard, "image degree out of range");

    std::vector<std::string> names = aux->names();
    for (const auto& zn : source_ring->names()) {
        if (std::find(names.begin(), names.end(), zn) != names.end())
            fail(Errc::invalid_argument, "elim_kernel: variable name clash: " + zn);
        names.push_back(zn);
    }
    std::vector<std::uint32_t> weights(aux_w);
    weights.insert(weights.end(), nz, static_cast<std::uint32_t>(image_degree));
    RingPtr<K> big = make_ring(aux->field(), names, MonomialOrder::block_elim(na), weights);

    auto lift_aux = [&](const Poly<K>& p) {
        std::vector<typename Poly<K>::Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<Expo> e(na + nz, 0);
            for (std::size_t v = 0; v < na; ++v) e[v] = t.m[v];
            ts.push_back({Monomial(std::move(e)), t.c});
        }
        return Poly<K>::from_terms(big, std::move(ts));
    };

    std::vector<Poly<K>> gens;
    for (const auto& rel : relations) gens.push_back(lift_aux(rel));
    for (std::size_t i = 0; i < nz; ++i) {
        Poly<K> zi = Poly<K>::variable(big, na + i);
        gens.push_back(zi - lift_aux(images[i]));
    }

    Ideal<K> ideal{big, std::move(gens)};
    GroebnerBasis<K> gb = buchberger_ideal(ideal);

    std::vector<Poly<K>> out;
    for (const auto& p : gb.gens_as_polys()) {
        bool lead_aux_free = true;
        for (std::size_t v = 0; v < na; ++v)
            if (p.lead_monomial()[v] != 0) {
                lead_aux_free = false;
                break;
            }
        if (!lead_aux_free) continue;
        std::vector<typename Poly<K>::Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<Expo> e(nz);
            for (std::size_t v = 0; v < na; ++v)
                if (t.m[v] != 0) fail(Errc::internal, "elimination violated in elim_kernel");
            for (std::size_t v = 0; v < nz; ++v) e[v] = t.m[na + v];
            ts.push_back({Monomial(std::move(e)), t.c});
        }
        out.push_back(Poly<K>::from_terms(source_ring, std::move(ts)));
    }
    presentation_normalize(out);
    return out;
}

} // namespace drnc

#endif
