// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Text format for polynomials and ideal files.
//
//   vars: x, y, z
//   x*z - y^2
//   u^2
//
// Terms are joined by +/-, `*` is optional between symbols, `^` marks powers,
// coefficients are integers or a/b rationals. F_p coefficients print as the
// representative of minimal absolute value.
#ifndef DRNC_CORE_FORMAT_HPP
#define DRNC_CORE_FORMAT_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace drnc {

namespace detail {

template <class K>
struct CoeffText {
    // (is_negative, magnitude string, magnitude is one)
    static std::tuple<bool, std::string, bool> split(const K& F, const typename K::Elt& c);
};

template <>
struct CoeffText<FpField> {
    static std::tuple<bool, std::string, bool> split(const FpField& F, FpField::Elt c) {
        std::int64_t b = F.balanced(c);
        bool neg = b < 0;
        std::int64_t mag = neg ? -b : b;
        return {neg, std::to_string(mag), mag == 1};
    }
};

template <>
struct CoeffText<QQField> {
    static std::tuple<bool, std::string, bool> split(const QQField&, const BigRat& c) {
        bool neg = c.sign() < 0;
        BigRat mag = neg ? -c : c;
        return {neg, mag.to_string(), mag == BigRat(1)};
    }
};

} // namespace detail

template <class K>
std::string monomial_text(const Ring<K>& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

// Terms print in descending lexicographic order regardless of the ring's
// working order; parsing does not depend on term order.
template <class K>
std::string poly_text(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const K& F = p.ring()->field();
    std::vector<const typename Poly<K>::Term*> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        return detail::cmp_lex_range(a->m, b->m, 0, a->m.nvars()) > 0;
    });
    std::string out;
    bool first = true;
    for (const auto* tp : terms) {
        const auto& t = *tp;
        auto [neg, mag, mag_is_one] = detail::CoeffText<K>::split(F, t.c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_text(*p.ring(), t.m);
        if (mono.empty()) {
            out += mag;
        } else if (mag_is_one) {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(Errc::parse, "expected integer at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    // Longest declared variable name starting here, or -1.
    int match_var(const std::vector<std::string>& names) {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const std::string& n = names[i];
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best = static_cast<int>(i);
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }
};

} // namespace detail

template <class K>
Poly<K> parse_poly(const RingPtr<K>& ring, const std::string& text) {
    detail::PolyLexer lx{text};
    const K& F = ring->field();
    using P = Poly<K>;
    P result = P::zero(ring);

    bool expect_term = true;
    bool negate = false;
    while (!lx.eof()) {
        if (expect_term) {
            while (lx.accept('-')) negate = !negate;
            while (lx.accept('+')) {
            }
            while (lx.accept('-')) negate = !negate;
        }
        // one term: optional coefficient, then symbol parts
        typename K::Elt coeff = F.one();
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.integer();
            if (lx.accept('/')) {
                std::string den = lx.integer();
                coeff = F.from_rat(BigRat(BigInt(num), BigInt(den)));
            } else {
                coeff = F.from_rat(BigRat(BigInt(num), BigInt(1)));
            }
            saw_anything = true;
            lx.accept('*');
        }
        Monomial m(ring->nvars());
        while (true) {
            int v = lx.match_var(ring->names());
            if (v < 0) break;
            saw_anything = true;
            std::uint32_t e = 1;
            if (lx.accept('^')) {
                std::string es = lx.integer();
                if (es.size() > 5) fail(Errc::guard, "exponent overflow (>= 2^16)");
                e = static_cast<std::uint32_t>(std::stoul(es));
                if (e > kMaxExponent) fail(Errc::guard, "exponent overflow (>= 2^16)");
            }
            std::uint32_t total = std::uint32_t(m[static_cast<std::size_t>(v)]) + e;
            if (total > kMaxExponent) fail(Errc::guard, "exponent overflow (>= 2^16)");
            m.set(static_cast<std::size_t>(v), Expo(total));
            lx.accept('*');
        }
        if (!saw_anything) {
            fail(Errc::parse, "unknown symbol at offset " + std::to_string(lx.pos) + " in: " + text);
        }
        if (negate) coeff = F.neg(coeff);
        result = result + P::monomial(ring, std::move(m), coeff);
        negate = false;
        expect_term = true;
        if (lx.eof()) break;
        char c = lx.peek();
        if (c != '+' && c != '-')
            fail(Errc::parse, "expected + or - at offset " + std::to_string(lx.pos) + " in: " + text);
    }
    return result;
}

// Parses an ideal file: `vars:` header then one polynomial per line.
// `strict_graded` rejects inhomogeneous polynomials.
template <class K>
std::pair<RingPtr<K>, std::vector<Poly<K>>> parse_ideal(const K& field, const std::string& text,
                                                        MonomialOrder order = MonomialOrder::grevlex(),
                                                        bool strict_graded = false) {
    std::istringstream in(text);
    std::string line;
    RingPtr<K> ring;
    std::vector<Poly<K>> polys;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        if (!ring) {
            if (line.rfind("vars:", 0) != 0) fail(Errc::parse, "ideal file must start with a `vars:` header");
            std::vector<std::string> names;
            std::string rest = line.substr(5);
            std::string cur;
            for (char c : rest + ",") {
                if (c == ',' || c == ' ' || c == '\t') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (names.empty()) fail(Errc::parse, "empty variable list in `vars:` header");
            ring = make_ring(field, names, order);
            continue;
        }
        Poly<K> p = parse_poly(ring, line);
        if (strict_graded && !p.is_homogeneous())
            fail(Errc::inhomogeneous, "inhomogeneous polynomial rejected under graded mode: " + line);
        polys.push_back(std::move(p));
    }
    if (!ring) fail(Errc::parse, "ideal file must start with a `vars:` header");
    return {ring, polys};
}

template <class K>
std::string ideal_text(const RingPtr<K>& ring, const std::vector<Poly<K>>& polys) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i) out += ", ";
        out += ring->name(i);
    }
    out += "\n";
    for (const auto& p : polys) out += poly_text(p) + "\n";
    return out;
}

} // namespace drnc

#endif
