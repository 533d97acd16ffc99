// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Decompositions of symmetric powers of symmetric powers into Schur functors:
// the SL2 Clebsch-Gordan rule, the Littlewood-Richardson rule by tableau
// enumeration, dimension-2 recurrences driven by the Eagon-Northcott complex,
// recurrences for dim 3 and 4 driven by Veronese resolutions, and an
// independent character-peeling oracle.
#ifndef DRNC_CORE_PLETHYSM_HPP
#define DRNC_CORE_PLETHYSM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace drnc {

// Weakly decreasing list of positive integers; the empty partition is the
// trivial representation.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
bool is_valid_partition(const Partition& p);

// Direct sum decomposition into Schur functors of V with dim V = dim_v.
// Multiplicities are signed internally (virtual representations appear inside
// the recurrences); final results of the public operations are non-negative.
struct Decomp {
    std::map<Partition, std::int64_t> terms;
    int dim_v = 2;

    void add(const Partition& p, std::int64_t mult);
    bool is_zero() const { return terms.empty(); }
    bool nonnegative() const;
    std::int64_t multiplicity(const Partition& p) const;
    std::int64_t dimension() const; // sum of mult * schur_dim
    friend bool operator==(const Decomp& a, const Decomp& b) {
        return a.dim_v == b.dim_v && a.terms == b.terms;
    }
};

// Weyl dimension formula for the Schur functor S_lambda of a dim_v space.
std::int64_t schur_dim(const Partition& lambda, int dim_v);

// Determinant-twist normalization: subtract lambda_{dim_v} from every part.
Partition sl_reduce(const Partition& lambda, int dim_v);
Decomp sl_reduce(const Decomp& d);

// S^m . S^n = S^{m+n} + S^{m+n-2} + ... + S^{|m-n|}  (dim V = 2)
Decomp cg_product(int m, int n);

// Littlewood-Richardson expansion, truncated to partitions with <= dim_v rows.
Decomp lr_product(const Partition& lambda, const Partition& mu, int dim_v);
Decomp decomp_product(const Decomp& a, const Decomp& b);

// S^t(S^d V) for dim V = 2, SL2-normalized (single-row constituents).
Decomp sym_sym_dim2(int t, int d);

// Lambda^m(S^n V) for dim V = 2 via S^m(S^{n-m+1} V); each call is checked
// against the subset-character oracle.
Decomp lambda_sym_dim2(int m, int n);

enum class RecurrenceBase {
    dim3_deg2, // S^t(S^2), dim V = 3
    dim3_deg3, // S^t(S^3), dim V = 3
    dim4_deg2, // S^t(S^2), dim V = 4
};

// Resolution-driven recurrence evaluated in the representation ring, with the
// printed coefficients completed by determinant twists to honest GL weights.
// Negative final multiplicities raise an error instead of being clamped.
Decomp sym_sym_recurrence(int t, RecurrenceBase base);

// ---------------------------------------------------------------------------
// Character oracle

// Dense symmetric polynomial: exponent vector -> integer coefficient.
struct SymPolynomial {
    int nvars = 0;
    std::map<std::vector<int>, std::int64_t> coeff;

    void add(const std::vector<int>& key, std::int64_t c);
    bool symmetric_under_adjacent_swaps() const;
};

SymPolynomial sym_sym_character(int t, int d, int dim_v);
SymPolynomial schur_character(const Partition& lambda, int dim_v);
SymPolynomial ext_sym_character(int m, int n); // Lambda^m(S^n), dim 2

// Decomposes a non-negative integral character by iterated peeling of the
// graded-lex leading monomial against Schur characters.
Decomp peel_character(SymPolynomial chi, int dim_v);

// dim S^t(S^d V) = C(C(d+dim_v-1, d) + t - 1, t); guards the oracle at 10^6.
std::int64_t sym_sym_total_dim(int t, int d, int dim_v);

// Character-based computation of S^t(S^d V); independent of the recurrences.
Decomp sym_sym_oracle(int t, int d, int dim_v);

// ---------------------------------------------------------------------------
// Rendering

// `S6 + S[4,2] + 2 S[2,2,2]`; the empty partition prints as `I`.
std::string decomp_text(const Decomp& d);
// {"dim_v": n, "terms": [[[parts...], mult], ...]} sorted lexicographically.
std::string decomp_json(const Decomp& d);

} // namespace drnc

#endif
