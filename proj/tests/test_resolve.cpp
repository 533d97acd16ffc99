// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/format.hpp"
#include "core/resolve.hpp"
#include "support/oracles.hpp"

using namespace drnc;
using namespace drnc::testing;

namespace {

using PF = Poly<FpField>;

RingPtr<FpField> fp_ring(std::vector<std::string> names) {
    return make_ring(FpField(), std::move(names));
}

Ideal<FpField> parse_ideal_fp(const std::string& text) {
    auto [ring, polys] = parse_ideal(FpField(), text);
    return Ideal<FpField>{ring, polys};
}

BettiTable table_of(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
    BettiTable t;
    for (auto& [i, j, v] : entries) t.add(i, j, v);
    return t;
}

Ideal<FpField> twisted_cubic() {
    return parse_ideal_fp("vars: z0, z1, z2, z3\nz0*z2 - z1^2\nz0*z3 - z1*z2\nz1*z3 - z2^2\n");
}

Ideal<FpField> paper_double_curve() {
    return parse_ideal_fp("vars: x, y, z, u, v\nx*z - y^2\nx*u - y*v\ny*u - z*v\nu^2\nu*v\nv^2\n");
}

// degree-2 Veronese of P^2: kernel of z_ij -> monomials of degree 2 in 3 vars
Ideal<FpField> veronese22() {
    auto aux = fp_ring({"x0", "x1", "x2"});
    std::vector<PF> images;
    for (const auto& m : monomials_of_degree(3, 2))
        images.push_back(PF::monomial(aux, m, aux->field().one()));
    auto Z = fp_ring(z_names(6));
    return Ideal<FpField>{Z, elim_kernel<FpField>(images, {}, Z)};
}

std::int64_t count_std_monomials(const GroebnerBasis<FpField>& gb, int deg) {
    auto leads = lead_monomials(gb);
    std::int64_t n = 0;
    for (const auto& m : monomials_of_degree(gb.ambient.ring->nvars(), deg)) {
        bool divisible = false;
        for (const auto& l : leads)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("resolution of a single squared variable is Koszul") {
    auto ideal = parse_ideal_fp("vars: z0, z1, z2\nz2^2\n");
    auto res = min_resolution_ideal(ideal);
    CHECK(res.length() == 1);
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 2, 1}}));
    CHECK(composes_to_zero(res));
    CHECK(is_minimal_complex(res));
}

TEST_CASE("twisted cubic: Betti table and invariants") {
    auto res = min_resolution_ideal(twisted_cubic());
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
    CHECK(composes_to_zero(res));
    CHECK(is_minimal_complex(res));
    CHECK(res.length() <= 4);          // Hilbert syzygy bound
    CHECK(res.length() == 2);          // ACM curve: length equals codimension
    CHECK_FALSE(res.truncated);
}

TEST_CASE("veronese v2(P2): Betti table 6, 8, 3") {
    auto ideal = veronese22();
    CHECK(ideal.gens.size() == 6);
    auto res = min_resolution_ideal(ideal);
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
    CHECK(composes_to_zero(res));
    CHECK(res.length() == 3); // codimension of the Veronese surface in P^5
}

TEST_CASE("paper double curve: Betti table equals the rational normal quartic's") {
    auto res = min_resolution_ideal(paper_double_curve());
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
    CHECK(is_minimal_complex(res));
    CHECK(composes_to_zero(res));
}

TEST_CASE("minimalize: idempotent on a minimal complex") {
    auto res = min_resolution_ideal(twisted_cubic());
    auto again = minimalize(res);
    CHECK(betti(again) == betti(res));
    CHECK(again.length() == res.length());
}

TEST_CASE("minimalize: Koszul complex on (x, y) is unchanged") {
    auto ideal = parse_ideal_fp("vars: x, y\nx\ny\n");
    auto raw = schreyer_resolution(FreeMod<FpField>{ideal.ring, {0}},
                                   {poly_to_modelt(ideal.gens[0]), poly_to_modelt(ideal.gens[1])},
                                   std::make_shared<POTOrder>(ring_order(*ideal.ring)));
    CHECK(raw.length() == 2);
    auto min = minimalize(raw);
    CHECK(min.length() == 2);
    CHECK(betti(min) == table_of({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
}

TEST_CASE("minimalize prunes the Schreyer resolution to the minimal one") {
    auto ideal = twisted_cubic();
    std::vector<ModElt<FpField>> gens;
    for (const auto& p : ideal.gens) gens.push_back(poly_to_modelt(p));
    auto raw = schreyer_resolution(FreeMod<FpField>{ideal.ring, {0}}, gens,
                                   std::make_shared<POTOrder>(ring_order(*ideal.ring)));
    auto min = minimalize(raw);
    CHECK(betti(min) == betti(min_resolution_ideal(twisted_cubic())));
}

TEST_CASE("betti rejects non-minimal resolutions") {
    auto ideal = parse_ideal_fp("vars: x, y\nx\ny\n");
    auto raw = schreyer_resolution(FreeMod<FpField>{ideal.ring, {0}},
                                   {poly_to_modelt(ideal.gens[0]), poly_to_modelt(ideal.gens[1])},
                                   std::make_shared<POTOrder>(ring_order(*ideal.ring)));
    CHECK_THROWS_AS(betti(raw), Error);
}

TEST_CASE("redundant generators are pruned by minimalization") {
    // x*z - y^2 listed twice plus a combination: still the conic's resolution
    auto ideal = parse_ideal_fp("vars: x, y, z\nx*z - y^2\n2*x*z - 2*y^2\n");
    auto res = min_resolution_ideal(ideal);
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 2, 1}}));
}

TEST_CASE("zero and unit ideals") {
    auto R = fp_ring({"x", "y"});
    auto res = min_resolution_ideal(Ideal<FpField>{R, {}});
    CHECK(res.length() == 0);
    CHECK(betti(res) == table_of({{0, 0, 1}}));

    auto unit = Ideal<FpField>{R, {PF::constant(R, R->field().one())}};
    auto ures = min_resolution_ideal(unit);
    CHECK(betti(ures).entries.empty());
}

TEST_CASE("max_length truncates explicitly, never silently") {
    auto res = min_resolution_ideal(veronese22(), 2);
    CHECK(res.truncated);
    CHECK(res.length() == 2);
    auto t = betti(res);
    CHECK(t.at(1, 2) == 6);
    CHECK(t.at(2, 3) == 8);
}

TEST_CASE("res_poly: conic re-embedded, oracle = min_resolution") {
    auto conic = parse_ideal_fp("vars: z0, z1, z2\nz0*z2 - z1^2\n");
    auto conic_table = betti(min_resolution_ideal(conic));
    ResPoly p = res_poly(conic_table);
    ResPoly expected;
    expected.add(0, 0, 1);
    expected.add(1, 2, 1);
    CHECK(p == expected);

    // multiply by (1 + x t): must match the conic viewed in P^3
    ResPoly shifted = res_poly_mul(p, ResPoly::linear_factor_pow(1));
    auto embedded = parse_ideal_fp("vars: z0, z1, z2, z3\nz0*z2 - z1^2\nz3\n");
    CHECK(shifted == res_poly(betti(min_resolution_ideal(embedded))));

    // p * 1 = p
    CHECK(res_poly_mul(p, ResPoly::one()) == p);
    CHECK(shifted.text() == "1 + x*t + x*t^2 + x^2*t^3");
}

TEST_CASE("hilbert: numerator, polynomial, and series checks") {
    SUBCASE("double line in the plane") {
        auto h = hilbert(parse_ideal_fp("vars: z0, z1, z2\nz2^2\n"));
        CHECK(h.polynomial_text() == "2*t + 1");
    }
    SUBCASE("twisted cubic") {
        auto h = hilbert(twisted_cubic());
        CHECK(h.polynomial_text() == "3*t + 1");
        CHECK(h.polynomial_at(2) == BigRat(7));
    }
    SUBCASE("paper double curve has H(t) = 4t + 1") {
        auto h = hilbert(paper_double_curve());
        CHECK(h.polynomial_text() == "4*t + 1");
    }
    SUBCASE("zero ideal gives the free ring series") {
        auto R = fp_ring({"x", "y"});
        auto h = hilbert(Ideal<FpField>{R, {}});
        CHECK(h.numerator == std::vector<std::int64_t>{1});
        CHECK(h.polynomial_text() == "t + 1");
    }
}

TEST_CASE("hilbert series coefficients match standard monomial counts") {
    for (auto ideal : {twisted_cubic(), paper_double_curve()}) {
        auto gb = buchberger_ideal(ideal);
        auto nume = hilbert_numerator(lead_monomials(gb), ideal.ring->nvars());
        auto coeffs = series_coefficients(nume, ideal.ring->nvars(),
                                          nume.size() + 3);
        for (std::size_t d = 0; d < coeffs.size(); ++d)
            CHECK(coeffs[d] == count_std_monomials(gb, static_cast<int>(d)));
    }
}

TEST_CASE("Euler identity: alternating Betti sum equals the Hilbert numerator") {
    for (auto ideal : {twisted_cubic(), paper_double_curve(), veronese22()}) {
        auto res = min_resolution_ideal(ideal);
        auto t = betti(res);
        auto h = hilbert(ideal);
        std::map<int, std::int64_t> euler;
        for (auto& [k, v] : t.entries) euler[k.second] += (k.first % 2 == 0 ? v : -v);
        std::vector<std::int64_t> poly;
        for (auto& [j, c] : euler) {
            if (c == 0) continue;
            if (poly.size() <= static_cast<std::size_t>(j)) poly.resize(static_cast<std::size_t>(j) + 1, 0);
            poly[static_cast<std::size_t>(j)] = c;
        }
        CHECK(poly == h.numerator);
    }
}

TEST_CASE("quotient_dim reads graded dimensions off the lead ideal") {
    auto gb = buchberger_ideal(paper_double_curve());
    CHECK(quotient_dim(gb, 0) == 1);
    CHECK(quotient_dim(gb, 1) == 5);
    CHECK(quotient_dim(gb, 2) == 9);  // 4*2 + 1
    CHECK(quotient_dim(gb, 3) == 13); // 4*3 + 1
}

TEST_CASE("module presentation resolves with shifted generators") {
    // coker of [x y] : R(-1)^2 -> R, the maximal ideal of k[x,y]
    auto R = fp_ring({"x", "y"});
    FreeMod<FpField> fm{R, {0}};
    auto order = std::make_shared<POTOrder>(ring_order(*R));
    std::vector<ModElt<FpField>> gens{poly_to_modelt(PF::variable(R, 0)),
                                      poly_to_modelt(PF::variable(R, 1))};
    auto res = min_resolution(fm, gens, order);
    CHECK(betti(res) == table_of({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
}

TEST_CASE("computed resolutions are exact, certified degree by degree") {
    for (auto ideal : {twisted_cubic(), paper_double_curve(), veronese22()}) {
        auto res = min_resolution_ideal(ideal);
        CHECK(resolution_exact_up_to(res, 7));
    }
    // the Schreyer (non-minimal) complex is exact too
    auto ideal = twisted_cubic();
    std::vector<ModElt<FpField>> gens;
    for (const auto& p : ideal.gens) gens.push_back(poly_to_modelt(p));
    auto raw = schreyer_resolution(FreeMod<FpField>{ideal.ring, {0}}, gens,
                                   std::make_shared<POTOrder>(ring_order(*ideal.ring)));
    CHECK(resolution_exact_up_to(raw, 7));
}

TEST_CASE("Betti tables are invariant under generator permutation") {
    std::mt19937_64 rng(321);
    for (auto ideal : {twisted_cubic(), paper_double_curve(), veronese22()}) {
        auto reference = betti(min_resolution_ideal(ideal));
        for (int round = 0; round < 3; ++round) {
            auto shuffled = ideal;
            std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
            CHECK(betti(min_resolution_ideal(shuffled)) == reference);
        }
    }
}

TEST_CASE("random homogeneous monomial ideals satisfy the global invariants") {
    std::mt19937_64 rng(777);
    auto R = fp_ring(z_names(4));
    std::uniform_int_distribution<int> ngens(1, 5);
    for (int round = 0; round < 12; ++round) {
        std::vector<PF> gens;
        int k = ngens(rng);
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> dd(1, 3);
            int deg = dd(rng);
            std::vector<Expo> e(4, 0);
            for (int b = 0; b < deg; ++b) {
                std::uniform_int_distribution<int> dv(0, 3);
                ++e[static_cast<std::size_t>(dv(rng))];
            }
            gens.push_back(PF::monomial(R, Monomial(e), R->field().one()));
        }
        Ideal<FpField> ideal{R, gens};
        auto res = min_resolution_ideal(ideal);
        CHECK(composes_to_zero(res));
        CHECK(is_minimal_complex(res));
        CHECK(res.length() <= 4);
        // Euler identity against the Hilbert numerator
        auto h = hilbert(ideal);
        std::map<int, std::int64_t> euler;
        for (auto& [key, v] : betti(res).entries) euler[key.second] += (key.first % 2 == 0 ? v : -v);
        std::vector<std::int64_t> poly;
        for (auto& [j, c] : euler) {
            if (c == 0) continue;
            if (poly.size() <= static_cast<std::size_t>(j))
                poly.resize(static_cast<std::size_t>(j) + 1, 0);
            poly[static_cast<std::size_t>(j)] = c;
        }
        if (poly.empty()) poly = {1}; // unit ideal: empty table, numerator 0
        CHECK((poly == h.numerator || (betti(res).entries.empty() && h.numerator == std::vector<std::int64_t>{0})));
    }
}

TEST_CASE("betti text and json renderings") {
    auto res = min_resolution_ideal(twisted_cubic());
    auto t = betti(res);
    CHECK(betti_json(t) == "{\"entries\": [[0, 0, 1], [1, 2, 3], [2, 3, 2]]}");
    std::string grid = betti_text(t);
    CHECK(grid.find("0:") != std::string::npos);
    CHECK(grid.find("1:") != std::string::npos);
    CHECK(grid.find(".") != std::string::npos);
    CHECK(grid.find("3") != std::string::npos);
}
