// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0

#include "resolve.hpp"

namespace drnc {

namespace {

void poly_mul_into(std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    a = std::move(r);
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a < b;
    });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::int64_t> numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (!gens.back().total_degree()) return {0}; // contains 1: unit ideal, R/I = 0

    // pairwise coprime generators: product of (1 - t^deg)
    bool all_coprime = true;
    for (std::size_t i = 0; i < gens.size() && all_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                all_coprime = false;
                break;
            }
    if (all_coprime) {
        std::vector<std::int64_t> acc{1};
        for (const auto& g : gens) {
            std::vector<std::int64_t> f(g.total_degree() + 1, 0);
            f[0] = 1;
            f[g.total_degree()] = -1;
            poly_mul_into(acc, f);
        }
        return acc;
    }

    // pivot: pure power of the most frequent variable, at its least exponent
    std::vector<std::size_t> freq(nvars, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0) ++freq[v];
    std::size_t pv = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (freq[v] > freq[pv]) pv = v;
    Expo pe = 0;
    for (const auto& g : gens)
        if (g[pv] > 0 && (pe == 0 || g[pv] < pe)) pe = g[pv];
    Monomial pivot(nvars);
    pivot.set(pv, pe);

    // N(I) = N(I + (pivot)) + t^deg(pivot) * N(I : pivot)
    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g.quotient_by(gcd(g, pivot)));

    std::vector<std::int64_t> a = numerator_rec(std::move(plus), nvars);
    std::vector<std::int64_t> b = numerator_rec(std::move(colon), nvars);
    if (a.size() < b.size() + pivot.total_degree()) a.resize(b.size() + pivot.total_degree(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + pivot.total_degree()] += b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

} // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    auto r = numerator_rec(std::move(gens), nvars);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& numerator,
                                              std::size_t nvars, std::size_t upto) {
    // coefficients of numerator / (1-t)^nvars
    std::vector<std::int64_t> out(upto + 1, 0);
    for (std::size_t j = 0; j < numerator.size() && j <= upto; ++j) {
        if (numerator[j] == 0) continue;
        for (std::size_t k = j; k <= upto; ++k)
            out[k] += numerator[j] * binomial(static_cast<std::int64_t>(nvars - 1 + k - j),
                                              static_cast<std::int64_t>(nvars - 1));
    }
    return out;
}

HilbertData hilbert_from_numerator(std::vector<std::int64_t> numerator, std::size_t nvars) {
    HilbertData h;
    h.var_count = nvars;
    h.numerator = numerator;

    // cancel (1-t)^a out of the numerator
    std::size_t cancelled = 0;
    auto value_at_one = [](const std::vector<std::int64_t>& p) {
        std::int64_t s = 0;
        for (auto c : p) s += c;
        return s;
    };
    std::vector<std::int64_t> k = std::move(numerator);
    while (k.size() > 0 && value_at_one(k) == 0 && cancelled < nvars) {
        // divide by (1 - t): q_i = -(k_{i+1} + k_{i+2} + ...) accumulated backwards
        std::vector<std::int64_t> q(k.size() > 1 ? k.size() - 1 : 1, 0);
        std::int64_t carry = 0;
        for (std::size_t i = k.size(); i-- > 1;) {
            carry += k[i];
            q[i - 1] = -carry;
        }
        k = std::move(q);
        while (k.size() > 1 && k.back() == 0) k.pop_back();
        ++cancelled;
    }
    std::size_t dim = nvars - cancelled; // Krull dimension of R/I

    if (dim == 0) {
        h.hilbert_polynomial.clear(); // eventually zero
        return h;
    }
    // H(l) = sum_j k_j * C(l - j + dim - 1, dim - 1), expanded in l
    std::vector<BigRat> hp(dim, BigRat(0));
    BigRat fact(1);
    for (std::size_t i = 1; i < dim; ++i) fact = fact * BigRat(static_cast<long>(i));
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0) continue;
        // C(l - j + dim - 1, dim - 1) = prod_{s=1}^{dim-1} (l - j + s) / (dim-1)!
        std::vector<BigRat> prod{BigRat(1)};
        for (std::size_t s = 1; s < dim; ++s) {
            std::vector<BigRat> next(prod.size() + 1, BigRat(0));
            BigRat c = BigRat(static_cast<long>(s)) - BigRat(static_cast<long>(j));
            for (std::size_t d = 0; d < prod.size(); ++d) {
                next[d] = next[d] + prod[d] * c;
                next[d + 1] = next[d + 1] + prod[d];
            }
            prod = std::move(next);
        }
        for (std::size_t d = 0; d < prod.size(); ++d)
            hp[d] = hp[d] + BigRat(static_cast<long>(k[j])) * prod[d] / fact;
    }
    while (hp.size() > 1 && hp.back().is_zero()) hp.pop_back();
    h.hilbert_polynomial = std::move(hp);
    return h;
}

BigRat HilbertData::polynomial_at(std::int64_t t) const {
    BigRat acc(0);
    for (std::size_t i = hilbert_polynomial.size(); i-- > 0;)
        acc = acc * BigRat(static_cast<long>(t)) + hilbert_polynomial[i];
    return acc;
}

std::string HilbertData::polynomial_text() const {
    if (hilbert_polynomial.empty()) return "0";
    std::string out;
    for (std::size_t i = hilbert_polynomial.size(); i-- > 0;) {
        const BigRat& c = hilbert_polynomial[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        BigRat mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (mono.empty()) out += mag.to_string();
        else if (mag == BigRat(1)) out += mono;
        else out += mag.to_string() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

} // namespace drnc
