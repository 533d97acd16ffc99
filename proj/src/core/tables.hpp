// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Betti tables, the bivariate resolution polynomial, and their text/JSON
// renderings. Field-independent.
#ifndef DRNC_CORE_TABLES_HPP
#define DRNC_CORE_TABLES_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace drnc {

// (homological index i, internal degree j) -> rank
struct BettiTable {
    std::map<std::pair<int, int>, std::int64_t> entries;

    void add(int i, int j, std::int64_t count) {
        if (count == 0) return;
        entries[{i, j}] += count;
        if (entries[{i, j}] == 0) entries.erase({i, j});
    }
    std::int64_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }

    int max_index() const {
        int m = 0;
        for (auto& [k, v] : entries) m = std::max(m, k.first);
        return m;
    }

    // True when beta_{i,j} = 0 unless j = i+1 for every i >= 1.
    bool strictly_linear() const {
        for (auto& [k, v] : entries)
            if (k.first >= 1 && k.second != k.first + 1 && v != 0) return false;
        return true;
    }
};

// Grid with rows indexed by j-i, columns by homological index, "." for zeros.
inline std::string betti_text(const BettiTable& t) {
    if (t.entries.empty()) return "(empty Betti table)\n";
    int imax = 0, smin = 0, smax = 0;
    bool first = true;
    for (auto& [k, v] : t.entries) {
        imax = std::max(imax, k.first);
        int s = k.second - k.first;
        if (first) {
            smin = smax = s;
            first = false;
        }
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(imax) + 1, 1);
    for (int i = 0; i <= imax; ++i) {
        width[static_cast<std::size_t>(i)] = std::to_string(i).size();
        for (int s = smin; s <= smax; ++s) {
            auto v = t.at(i, s + i);
            if (v != 0) width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], std::to_string(v).size());
        }
    }
    std::ostringstream out;
    std::size_t label = std::max(std::to_string(smin).size(), std::to_string(smax).size()) + 1;
    out << std::string(label + 1, ' ');
    for (int i = 0; i <= imax; ++i) {
        std::string h = std::to_string(i);
        out << std::string(width[static_cast<std::size_t>(i)] + 2 - h.size(), ' ') << h;
    }
    out << "\n";
    for (int s = smin; s <= smax; ++s) {
        std::string h = std::to_string(s) + ":";
        out << std::string(label + 1 - h.size(), ' ') << h;
        for (int i = 0; i <= imax; ++i) {
            auto v = t.at(i, s + i);
            std::string cell = v == 0 ? "." : std::to_string(v);
            out << std::string(width[static_cast<std::size_t>(i)] + 2 - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

// {"entries": [[i, j, rank], ...]} sorted lexicographically.
inline std::string betti_json(const BettiTable& t) {
    std::string out = "{\"entries\": [";
    bool first = true;
    for (auto& [k, v] : t.entries) {
        if (!first) out += ", ";
        first = false;
        out += "[" + std::to_string(k.first) + ", " + std::to_string(k.second) + ", " +
               std::to_string(v) + "]";
    }
    out += "]}";
    return out;
}

// P(x,t) = sum b_ij x^i t^j as a sparse integer polynomial.
struct ResPoly {
    std::map<std::pair<int, int>, std::int64_t> coeff; // (i, j) -> c

    static ResPoly one() {
        ResPoly p;
        p.coeff[{0, 0}] = 1;
        return p;
    }
    // (1 + x t)^m
    static ResPoly linear_factor_pow(int m);

    void add(int i, int j, std::int64_t c) {
        if (c == 0) return;
        coeff[{i, j}] += c;
        if (coeff[{i, j}] == 0) coeff.erase({i, j});
    }
    friend bool operator==(const ResPoly& a, const ResPoly& b) { return a.coeff == b.coeff; }

    std::string text() const {
        if (coeff.empty()) return "0";
        std::string out;
        for (auto& [k, v] : coeff) {
            if (!out.empty()) out += v < 0 ? " - " : " + ";
            else if (v < 0) out += "-";
            std::int64_t a = v < 0 ? -v : v;
            std::string mono;
            if (k.first > 0) mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0) {
                if (!mono.empty()) mono += "*";
                mono += "t" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
            }
            if (mono.empty()) out += std::to_string(a);
            else if (a == 1) out += mono;
            else out += std::to_string(a) + "*" + mono;
        }
        return out;
    }
};

inline ResPoly res_poly(const BettiTable& t) {
    ResPoly p;
    for (auto& [k, v] : t.entries) p.add(k.first, k.second, v);
    return p;
}

inline ResPoly res_poly_mul(const ResPoly& a, const ResPoly& b) {
    ResPoly r;
    for (auto& [ka, va] : a.coeff)
        for (auto& [kb, vb] : b.coeff) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

inline ResPoly ResPoly::linear_factor_pow(int m) {
    ResPoly base;
    base.coeff[{0, 0}] = 1;
    base.coeff[{1, 1}] = 1;
    ResPoly r = ResPoly::one();
    for (int i = 0; i < m; ++i) r = res_poly_mul(r, base);
    return r;
}

// Betti table of a resolution polynomial with non-negative coefficients.
inline BettiTable res_poly_table(const ResPoly& p) {
    BettiTable t;
    for (auto& [k, v] : p.coeff) {
        if (v < 0) fail(Errc::invalid_argument, "resolution polynomial has a negative coefficient");
        t.add(k.first, k.second, v);
    }
    return t;
}

} // namespace drnc

#endif
