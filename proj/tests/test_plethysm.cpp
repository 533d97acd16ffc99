// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/numeric.hpp"
#include "core/plethysm.hpp"

using namespace drnc;

namespace {

Decomp make(int dim, std::initializer_list<std::pair<Partition, std::int64_t>> items) {
    Decomp d;
    d.dim_v = dim;
    for (auto& [p, m] : items) d.add(p, m);
    return d;
}

Partition random_partition(std::mt19937_64& rng, int max_parts, int max_part) {
    std::uniform_int_distribution<int> np(0, max_parts);
    std::uniform_int_distribution<int> pv(1, max_part);
    int n = np(rng);
    Partition p;
    for (int i = 0; i < n; ++i) p.push_back(pv(rng));
    std::sort(p.rbegin(), p.rend());
    return p;
}

} // namespace

TEST_CASE("cg_product: paper rule") {
    CHECK(cg_product(2, 3) == make(2, {{{5}, 1}, {{3}, 1}, {{1}, 1}}));
    CHECK(cg_product(0, 7) == make(2, {{{7}, 1}}));
    CHECK(cg_product(1, 1) == make(2, {{{2}, 1}, {{}, 1}}));
}

TEST_CASE("cg_product symmetry and dimension") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            auto a = cg_product(m, n);
            CHECK(a == cg_product(n, m));
            CHECK(a.dimension() == (m + 1) * (n + 1));
        }
}

TEST_CASE("schur_dim: Weyl formula values") {
    CHECK(schur_dim({1, 1}, 3) == 3);
    CHECK(schur_dim({2, 2}, 3) == 6);
    CHECK(schur_dim({2, 1}, 3) == 8);
    CHECK(schur_dim({8}, 3) == 45);
    CHECK(schur_dim({}, 4) == 1);
    CHECK(schur_dim({5, 4}, 3) == 35);
    CHECK(schur_dim({5, 1}, 3) == 35);
    CHECK(schur_dim({4, 2}, 3) == 27);
    CHECK(schur_dim({2, 2}, 4) == 20);
    CHECK_THROWS_AS(schur_dim({1, 1, 1}, 2), Error);
    CHECK_THROWS_AS(schur_dim({1, 2}, 3), Error);
}

TEST_CASE("sl_reduce") {
    CHECK(sl_reduce({2, 2, 2}, 3) == Partition{});
    CHECK(sl_reduce({3, 2, 1}, 3) == Partition{2, 1});
    CHECK(sl_reduce({4, 2}, 3) == Partition{4, 2});
    // determinant twists preserve dimension
    CHECK(schur_dim({3, 2, 1}, 3) == schur_dim(sl_reduce({3, 2, 1}, 3), 3));
}

TEST_CASE("lr_product: identities and the Pieri example") {
    CHECK(lr_product({3, 1}, {}, 3) == make(3, {{{3, 1}, 1}}));
    CHECK(lr_product({2, 2}, {2}, 3) ==
          make(3, {{{4, 2}, 1}, {{3, 2, 1}, 1}, {{2, 2, 2}, 1}}));
    // s_{22} * s_{22} truncated to three rows
    CHECK(lr_product({2, 2}, {2, 2}, 3) ==
          make(3, {{{4, 4}, 1}, {{4, 3, 1}, 1}, {{4, 2, 2}, 1}}));
}

TEST_CASE("lr_product at dim 2 reproduces the Clebsch-Gordan rule") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            Partition pm = m ? Partition{m} : Partition{};
            Partition pn = n ? Partition{n} : Partition{};
            CHECK(sl_reduce(lr_product(pm, pn, 2)) == cg_product(m, n));
        }
}

TEST_CASE("lr_product agrees with the character route") {
    std::mt19937_64 rng(4045);
    for (int it = 0; it < 25; ++it) {
        int dim = 3 + static_cast<int>(it % 2);
        Partition a = random_partition(rng, dim, 3);
        Partition b = random_partition(rng, dim, 3);
        SymPolynomial chi;
        chi.nvars = dim;
        const auto ca = schur_character(a, dim);
        const auto cb = schur_character(b, dim);
        for (auto& [ka, va] : ca.coeff)
            for (auto& [kb, vb] : cb.coeff) {
                std::vector<int> k(ka.size());
                for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
                chi.add(k, va * vb);
            }
        CHECK(peel_character(chi, dim) == lr_product(a, b, dim));
    }
}

TEST_CASE("lr_product associativity on random triples") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 10; ++it) {
        Partition a = random_partition(rng, 2, 3);
        Partition b = random_partition(rng, 2, 3);
        Partition c = random_partition(rng, 2, 2);
        Decomp left = decomp_product(lr_product(a, b, 3), make(3, {{c, 1}}));
        Decomp right = decomp_product(make(3, {{a, 1}}), lr_product(b, c, 3));
        CHECK(left == right);
    }
}

TEST_CASE("sym_sym_dim2: paper examples") {
    // S^2(S^d) = S^{2d} + S^{2d-4} + S^{2d-8} + ...
    for (int d = 0; d <= 6; ++d) {
        Decomp expect;
        expect.dim_v = 2;
        for (int k = 2 * d; k >= 0; k -= 4) expect.add(k == 0 ? Partition{} : Partition{k}, 1);
        CHECK(sym_sym_dim2(2, d) == expect);
    }
    CHECK(sym_sym_dim2(3, 3) == make(2, {{{9}, 1}, {{5}, 1}, {{3}, 1}}));
    CHECK(sym_sym_dim2(3, 6) ==
          make(2, {{{18}, 1}, {{14}, 1}, {{12}, 1}, {{10}, 1}, {{8}, 1}, {{6}, 2}, {{2}, 1}}));
}

TEST_CASE("lambda_sym_dim2: identity checked against the subset character") {
    CHECK(lambda_sym_dim2(1, 5) == make(2, {{{5}, 1}}));
    CHECK(lambda_sym_dim2(2, 2) == make(2, {{{2}, 1}}));
    CHECK(lambda_sym_dim2(3, 3) == make(2, {{{3}, 1}}));
    CHECK(lambda_sym_dim2(4, 3) == make(2, {{{}, 1}})); // top exterior power
    CHECK_THROWS_AS(lambda_sym_dim2(5, 3), Error);
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= n + 1; ++m) {
            auto d = lambda_sym_dim2(m, n);
            CHECK(d.dimension() == binomial(n + 1, m));
        }
}

TEST_CASE("recurrence II: printed examples") {
    CHECK(sym_sym_recurrence(2, RecurrenceBase::dim3_deg2) == make(3, {{{4}, 1}, {{2, 2}, 1}}));
    CHECK(sym_sym_recurrence(3, RecurrenceBase::dim3_deg2) ==
          make(3, {{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}}));
}

TEST_CASE("recurrence II matches the oracle up to t = 5") {
    for (int t = 0; t <= 5; ++t) {
        auto rec = sym_sym_recurrence(t, RecurrenceBase::dim3_deg2);
        auto orc = sym_sym_oracle(t, 2, 3);
        CHECK(rec == orc);
        CHECK(rec.dimension() == sym_sym_total_dim(t, 2, 3));
    }
}

TEST_CASE("recurrence III matches the oracle up to t = 4") {
    for (int t = 0; t <= 4; ++t) {
        auto rec = sym_sym_recurrence(t, RecurrenceBase::dim3_deg3);
        auto orc = sym_sym_oracle(t, 3, 3);
        CHECK(rec == orc);
        CHECK(rec.dimension() == sym_sym_total_dim(t, 3, 3));
    }
}

TEST_CASE("recurrence IV (printed verbatim) against the oracle") {
    for (int t = 0; t <= 5; ++t) {
        auto rec = sym_sym_recurrence(t, RecurrenceBase::dim4_deg2);
        auto orc = sym_sym_oracle(t, 2, 4);
        CHECK(rec == orc);
    }
}

TEST_CASE("recurrences hold past the contract ranges") {
    for (int t = 6; t <= 8; ++t)
        CHECK(sym_sym_recurrence(t, RecurrenceBase::dim3_deg2) == sym_sym_oracle(t, 2, 3));
    for (int t = 5; t <= 6; ++t)
        CHECK(sym_sym_recurrence(t, RecurrenceBase::dim3_deg3) == sym_sym_oracle(t, 3, 3));
    for (int t = 6; t <= 7; ++t)
        CHECK(sym_sym_recurrence(t, RecurrenceBase::dim4_deg2) == sym_sym_oracle(t, 2, 4));
}

TEST_CASE("oracle examples") {
    auto a = sl_reduce(sym_sym_oracle(2, 2, 2));
    CHECK(a == make(2, {{{4}, 1}, {{}, 1}}));

    auto b = sym_sym_oracle(3, 2, 3);
    CHECK(b == make(3, {{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}}));
    CHECK(b.dimension() == 56);
    CHECK(sym_sym_total_dim(3, 2, 3) == 56);

    for (int d = 0; d <= 4; ++d) {
        Decomp expect;
        expect.dim_v = 3;
        expect.add(d == 0 ? Partition{} : Partition{d}, 1);
        CHECK(sym_sym_oracle(1, d, 3) == expect);
    }
}

TEST_CASE("oracle equals the dim-2 recurrence for all t, d <= 6") {
    for (int t = 0; t <= 6; ++t)
        for (int d = 0; d <= 6; ++d) {
            auto rec = sym_sym_dim2(t, d);
            auto orc = sl_reduce(sym_sym_oracle(t, d, 2));
            CHECK(rec == orc);
            CHECK(rec.dimension() == sym_sym_total_dim(t, d, 2));
        }
}

TEST_CASE("characters are symmetric under adjacent swaps") {
    CHECK(sym_sym_character(3, 2, 3).symmetric_under_adjacent_swaps());
    CHECK(sym_sym_character(2, 3, 4).symmetric_under_adjacent_swaps());
    CHECK(schur_character({3, 1}, 3).symmetric_under_adjacent_swaps());
    CHECK(ext_sym_character(2, 4).symmetric_under_adjacent_swaps());
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(sym_sym_oracle(20, 6, 4), Error);
}

TEST_CASE("decomp rendering") {
    auto d = make(3, {{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 2}});
    CHECK(decomp_text(d) == "S6 + S[4,2] + 2 S[2,2,2]");
    CHECK(decomp_json(d) ==
          "{\"dim_v\": 3, \"terms\": [[[2, 2, 2], 2], [[4, 2], 1], [[6], 1]]}");
    CHECK(decomp_text(cg_product(1, 1)) == "S2 + I");
    CHECK(decomp_text(Decomp{}) == "0");
}
