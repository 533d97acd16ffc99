// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface over the templated core. Every object is an opaque handle
// wrapping a variant over the two coefficient fields; every entry point traps
// exceptions and maps them onto status codes.

#include "drnc.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <variant>

#include "core/format.hpp"
#include "core/verify.hpp"

using namespace drnc;

namespace {

thread_local std::string g_last_error;

drnc_status map_code(Errc c) {
    switch (c) {
    case Errc::invalid_argument: return DRNC_ERR_INVALID_ARGUMENT;
    case Errc::parse: return DRNC_ERR_PARSE;
    case Errc::ring_mismatch: return DRNC_ERR_RING_MISMATCH;
    case Errc::inhomogeneous: return DRNC_ERR_INHOMOGENEOUS;
    case Errc::guard: return DRNC_ERR_GUARD;
    case Errc::truncated: return DRNC_ERR_TRUNCATED;
    case Errc::verify: return DRNC_ERR_VERIFY_FAILED;
    case Errc::internal: return DRNC_ERR_INTERNAL;
    }
    return DRNC_ERR_INTERNAL;
}

template <class Fn>
drnc_status guarded(Fn&& fn) {
    try {
        fn();
        return DRNC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DRNC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

MonomialOrder order_from(const char* name) {
    if (!name || std::strcmp(name, "grevlex") == 0) return MonomialOrder::grevlex();
    if (std::strcmp(name, "lex") == 0) return MonomialOrder::lex();
    fail(Errc::invalid_argument, std::string("unknown monomial order: ") + name);
}

struct Options {
    std::uint32_t characteristic = kDefaultPrime;
    MonomialOrder order = MonomialOrder::grevlex();
};

Options options_from(const drnc_options* opts) {
    Options o;
    if (opts) {
        o.characteristic = opts->characteristic;
        o.order = order_from(opts->order);
    }
    return o;
}

} // namespace

struct drnc_ideal {
    std::variant<Ideal<FpField>, Ideal<QQField>> v;
};
struct drnc_resolution {
    std::variant<Resolution<FpField>, Resolution<QQField>> v;
};
struct drnc_betti {
    BettiTable t;
};
struct drnc_hilbert_data {
    HilbertData h;
};
struct drnc_decomp {
    Decomp d;
};

extern "C" {

DRNC_API drnc_options drnc_default_options(void) {
    drnc_options o;
    o.characteristic = kDefaultPrime;
    o.order = "grevlex";
    return o;
}

DRNC_API const char* drnc_last_error(void) { return g_last_error.c_str(); }

DRNC_API void drnc_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

DRNC_API drnc_status drnc_ideal_parse(const char* text, const drnc_options* opts, int strict_graded,
                                      drnc_ideal** out) {
    return guarded([&] {
        if (!text || !out) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        *out = with_field(o.characteristic, [&](auto field) {
            auto [ring, polys] = parse_ideal(field, text, o.order, strict_graded != 0);
            using K = decltype(field);
            return new drnc_ideal{Ideal<K>{ring, polys}};
        });
    });
}

DRNC_API drnc_status drnc_ideal_text(const drnc_ideal* ideal, char** out) {
    return guarded([&] {
        if (!ideal || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& i) { return dup_string(ideal_text(i.ring, i.gens)); },
                          ideal->v);
    });
}

DRNC_API drnc_status drnc_ideal_size(const drnc_ideal* ideal, size_t* out) {
    return guarded([&] {
        if (!ideal || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& i) { return i.gens.size(); }, ideal->v);
    });
}

DRNC_API void drnc_ideal_free(drnc_ideal* ideal) { delete ideal; }

DRNC_API drnc_status drnc_rnc_ideal(uint32_t d, const drnc_options* opts, drnc_ideal** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        *out = with_field(o.characteristic, [&](auto field) {
            return new drnc_ideal{rnc_ideal(field, static_cast<int>(d))};
        });
    });
}

DRNC_API drnc_status drnc_double_curve_ideal(uint32_t d, const drnc_options* opts,
                                             const int64_t* basis_matrix, drnc_ideal** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        *out = with_field(o.characteristic, [&](auto field) {
            using K = decltype(field);
            DoublingSpec<K> spec{static_cast<int>(d), -1, {}};
            if (basis_matrix) {
                std::vector<std::vector<typename K::Elt>> m(d);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c)
                        m[r].push_back(field.from_long(basis_matrix[r * d + c]));
                spec.basis_matrix = std::move(m);
            }
            return new drnc_ideal{ferrand_double_ideal(field, spec)};
        });
    });
}

DRNC_API drnc_status drnc_veronese_ideal(uint32_t n, uint32_t d, const drnc_options* opts,
                                         drnc_ideal** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        *out = with_field(o.characteristic, [&](auto field) {
            return new drnc_ideal{veronese_ideal(field, static_cast<int>(n), static_cast<int>(d))};
        });
    });
}

DRNC_API drnc_status drnc_linear_embed(const drnc_ideal* ideal, uint32_t m, drnc_ideal** out) {
    return guarded([&] {
        if (!ideal || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit(
            [&](const auto& i) { return new drnc_ideal{linear_embed(i, static_cast<int>(m))}; },
            ideal->v);
    });
}

/* ------------------------------------------------------------------ */

DRNC_API drnc_status drnc_min_resolution(const drnc_ideal* ideal, int max_length,
                                         drnc_resolution** out) {
    return guarded([&] {
        if (!ideal || !out) fail(Errc::invalid_argument, "null argument");
        std::optional<int> limit;
        if (max_length >= 0) limit = max_length;
        *out = std::visit(
            [&](const auto& i) { return new drnc_resolution{min_resolution_ideal(i, limit)}; },
            ideal->v);
    });
}

DRNC_API drnc_status drnc_resolution_length(const drnc_resolution* res, size_t* out) {
    return guarded([&] {
        if (!res || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& r) { return r.length(); }, res->v);
    });
}

DRNC_API drnc_status drnc_resolution_truncated(const drnc_resolution* res, int* out) {
    return guarded([&] {
        if (!res || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& r) { return r.truncated ? 1 : 0; }, res->v);
    });
}

DRNC_API drnc_status drnc_resolution_betti(const drnc_resolution* res, drnc_betti** out) {
    return guarded([&] {
        if (!res || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& r) { return new drnc_betti{betti(r)}; }, res->v);
    });
}

DRNC_API void drnc_resolution_free(drnc_resolution* res) { delete res; }

DRNC_API drnc_status drnc_betti_entry(const drnc_betti* b, int i, int j, int64_t* out) {
    return guarded([&] {
        if (!b || !out) fail(Errc::invalid_argument, "null argument");
        *out = b->t.at(i, j);
    });
}

DRNC_API drnc_status drnc_betti_text(const drnc_betti* b, char** out) {
    return guarded([&] {
        if (!b || !out) fail(Errc::invalid_argument, "null argument");
        *out = dup_string(betti_text(b->t));
    });
}

DRNC_API drnc_status drnc_betti_json(const drnc_betti* b, char** out) {
    return guarded([&] {
        if (!b || !out) fail(Errc::invalid_argument, "null argument");
        *out = dup_string(betti_json(b->t));
    });
}

DRNC_API void drnc_betti_free(drnc_betti* b) { delete b; }

DRNC_API drnc_status drnc_hilbert(const drnc_ideal* ideal, drnc_hilbert_data** out) {
    return guarded([&] {
        if (!ideal || !out) fail(Errc::invalid_argument, "null argument");
        *out = std::visit([](const auto& i) { return new drnc_hilbert_data{hilbert(i)}; }, ideal->v);
    });
}

DRNC_API drnc_status drnc_hilbert_polynomial_text(const drnc_hilbert_data* h, char** out) {
    return guarded([&] {
        if (!h || !out) fail(Errc::invalid_argument, "null argument");
        *out = dup_string(h->h.polynomial_text());
    });
}

DRNC_API drnc_status drnc_hilbert_numerator_text(const drnc_hilbert_data* h, char** out) {
    return guarded([&] {
        if (!h || !out) fail(Errc::invalid_argument, "null argument");
        std::string s;
        const auto& k = h->h.numerator;
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            std::int64_t c = k[j];
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            std::int64_t a = c < 0 ? -c : c;
            std::string mono = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
            if (mono.empty()) s += std::to_string(a);
            else if (a == 1) s += mono;
            else s += std::to_string(a) + "*" + mono;
        }
        if (s.empty()) s = "0";
        *out = dup_string(s);
    });
}

DRNC_API void drnc_hilbert_free(drnc_hilbert_data* h) { delete h; }

/* ------------------------------------------------------------------ */

DRNC_API drnc_status drnc_verify_double(uint32_t d, const drnc_options* opts, char** report,
                                        int* pass) {
    return guarded([&] {
        if (!report || !pass) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        Report rep = with_field(o.characteristic, [&](auto field) {
            return verify_double_curve(field, static_cast<int>(d));
        });
        *report = dup_string(rep.render());
        *pass = rep.pass() ? 1 : 0;
    });
}

DRNC_API drnc_status drnc_verify_rnc(uint32_t dmin, uint32_t dmax, const drnc_options* opts,
                                     char** report, int* pass) {
    return guarded([&] {
        if (!report || !pass) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        Report rep = with_field(o.characteristic, [&](auto field) {
            return verify_rnc(field, static_cast<int>(dmin), static_cast<int>(dmax));
        });
        *report = dup_string(rep.render());
        *pass = rep.pass() ? 1 : 0;
    });
}

DRNC_API drnc_status drnc_verify_lemma1(const drnc_options* opts, char** report, int* pass) {
    return guarded([&] {
        if (!report || !pass) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        Report rep = with_field(o.characteristic, [&](auto field) { return verify_lemma1(field); });
        *report = dup_string(rep.render());
        *pass = rep.pass() ? 1 : 0;
    });
}

DRNC_API drnc_status drnc_verify_castelnuovo(uint64_t seed, const drnc_options* opts, char** report,
                                             int* pass) {
    return guarded([&] {
        if (!report || !pass) fail(Errc::invalid_argument, "null argument");
        Options o = options_from(opts);
        Report rep =
            with_field(o.characteristic, [&](auto field) { return verify_castelnuovo(field, seed); });
        *report = dup_string(rep.render());
        *pass = rep.pass() ? 1 : 0;
    });
}

/* ------------------------------------------------------------------ */

DRNC_API drnc_status drnc_plethysm(uint32_t dim_v, uint32_t t, uint32_t d, drnc_decomp** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null argument");
        *out = new drnc_decomp{
            plethysm_value(static_cast<int>(dim_v), static_cast<int>(t), static_cast<int>(d))};
    });
}

DRNC_API drnc_status drnc_plethysm_oracle(uint32_t dim_v, uint32_t t, uint32_t d,
                                          drnc_decomp** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null argument");
        *out = new drnc_decomp{
            sym_sym_oracle(static_cast<int>(t), static_cast<int>(d), static_cast<int>(dim_v))};
    });
}

DRNC_API drnc_status drnc_plethysm_verify(uint32_t dim_v, uint32_t t, uint32_t d, char** report,
                                          int* pass) {
    return guarded([&] {
        if (!report || !pass) fail(Errc::invalid_argument, "null argument");
        Report rep =
            plethysm_verify(static_cast<int>(dim_v), static_cast<int>(t), static_cast<int>(d));
        *report = dup_string(rep.render());
        *pass = rep.pass() ? 1 : 0;
    });
}

DRNC_API drnc_status drnc_decomp_text(const drnc_decomp* d, char** out) {
    return guarded([&] {
        if (!d || !out) fail(Errc::invalid_argument, "null argument");
        *out = dup_string(decomp_text(d->d));
    });
}

DRNC_API drnc_status drnc_decomp_json(const drnc_decomp* d, char** out) {
    return guarded([&] {
        if (!d || !out) fail(Errc::invalid_argument, "null argument");
        *out = dup_string(decomp_json(d->d));
    });
}

DRNC_API drnc_status drnc_decomp_equal(const drnc_decomp* a, const drnc_decomp* b, int* out) {
    return guarded([&] {
        if (!a || !b || !out) fail(Errc::invalid_argument, "null argument");
        *out = (a->d == b->d) ? 1 : 0;
    });
}

DRNC_API void drnc_decomp_free(drnc_decomp* d) { delete d; }

} // extern "C"
