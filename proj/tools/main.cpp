// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// drnc command line: constructions, resolutions, Hilbert data, verification
// suites, and plethysm decompositions. Talks to the kernel exclusively
// through the C API in drnc.h.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 malformed input, unknown command, or guard violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "drnc.h"

namespace {

struct GlobalOpts {
    std::uint32_t characteristic = 32003;
    bool rationals = false;
    std::string order = "grevlex";
    bool json = false;
    int max_length = -1;
    std::uint64_t seed = 2026;
    bool graded = false;
    std::string input; // ideal file; "-" or empty reads stdin
};

drnc_options to_options(const GlobalOpts& g) {
    drnc_options o;
    o.characteristic = g.rationals ? 0 : g.characteristic;
    o.order = g.order.c_str();
    return o;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    drnc_string_free(s);
    return out;
}

[[noreturn]] void die(drnc_status st) {
    const char* what = drnc_last_error();
    switch (st) {
    case DRNC_ERR_PARSE:
        std::cerr << "error(parse): " << what << "\n";
        break;
    case DRNC_ERR_GUARD:
        std::cerr << "error(guard): " << what << "\n";
        break;
    case DRNC_ERR_INHOMOGENEOUS:
        std::cerr << "error(parse): " << what << "\n";
        break;
    case DRNC_ERR_INVALID_ARGUMENT:
        std::cerr << "error(usage): " << what << "\n";
        break;
    default:
        std::cerr << "error(internal): " << what << "\n";
        break;
    }
    std::exit(2);
}

void check(drnc_status st) {
    if (st != DRNC_OK) die(st);
}

std::string read_input(const GlobalOpts& g) {
    if (g.input.empty() || g.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(g.input);
    if (!in) {
        std::cerr << "error(usage): cannot open input file: " << g.input << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_ideal(drnc_ideal* ideal) {
    char* text = nullptr;
    check(drnc_ideal_text(ideal, &text));
    std::cout << take_string(text);
    drnc_ideal_free(ideal);
}

void resolve_and_print(drnc_ideal* ideal, const GlobalOpts& g) {
    drnc_resolution* res = nullptr;
    check(drnc_min_resolution(ideal, g.max_length, &res));
    int truncated = 0;
    check(drnc_resolution_truncated(res, &truncated));
    drnc_betti* b = nullptr;
    check(drnc_resolution_betti(res, &b));
    char* text = nullptr;
    if (g.json) {
        check(drnc_betti_json(b, &text));
        std::cout << take_string(text) << "\n";
    } else {
        check(drnc_betti_text(b, &text));
        std::cout << take_string(text);
    }
    if (truncated) std::cerr << "note: resolution truncated at --max-length\n";
    drnc_betti_free(b);
    drnc_resolution_free(res);
    drnc_ideal_free(ideal);
}

int report_exit(char* report, int pass) {
    std::cout << take_string(report);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"computer algebra for double rational normal curves: Groebner bases, minimal "
                 "free resolutions, Betti tables, Hilbert data, and symmetric-power plethysm"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.add_option("--char", g.characteristic, "prime field characteristic (default 32003)");
    app.add_flag("--rationals", g.rationals, "work over the rationals instead of F_p");
    app.add_option("--order", g.order, "monomial order: grevlex | lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--max-length", g.max_length, "truncate resolutions at this length");
    app.add_option("--seed", g.seed, "seed for randomized controls");
    app.add_flag("--graded", g.graded, "reject inhomogeneous input polynomials");

    std::uint32_t d = 2, n = 2, t = 2, dim_v = 2;
    std::uint32_t dmin = 2, dmax = 6;

    auto* cmd_rnc = app.add_subcommand("rnc", "ideal of the degree-d rational normal curve");
    cmd_rnc->add_option("--d", d, "degree")->required();

    auto* cmd_double = app.add_subcommand("double", "ideal of the Ferrand double curve in P^{2d}");
    cmd_double->add_option("--d", d, "degree of the supporting curve")->required();

    auto* cmd_veronese = app.add_subcommand("veronese", "toric ideal of the Veronese embedding");
    cmd_veronese->add_option("--n", n, "source dimension (1..3)")->required();
    cmd_veronese->add_option("--d", d, "embedding degree")->required();

    auto* cmd_resolve =
        app.add_subcommand("resolve", "Betti table of the minimal free resolution of an ideal");
    cmd_resolve->add_option("--input", g.input, "ideal file (vars: header; default stdin)");

    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert numerator and polynomial");
    cmd_hilbert->add_option("--input", g.input, "ideal file (vars: header; default stdin)");

    auto* cmd_vd = app.add_subcommand("verify-double", "all double-curve checks for one degree");
    cmd_vd->add_option("--d", d, "degree")->required();

    auto* cmd_vr = app.add_subcommand("verify-rnc", "Betti tables of RNCs over a degree range");
    cmd_vr->add_option("--dmin", dmin, "smallest degree (default 2)");
    cmd_vr->add_option("--dmax", dmax, "largest degree (default 6)");

    auto* cmd_vl = app.add_subcommand("verify-lemma1", "re-embedding product law on the corpus");

    auto* cmd_vc = app.add_subcommand("verify-castelnuovo",
                                      "Koszul non-vanishing for points on the double curve");

    auto* cmd_pl = app.add_subcommand("plethysm", "decomposition of S^t(S^d V)");
    cmd_pl->add_option("--dim", dim_v, "dim V: 2, 3, or 4")->required();
    cmd_pl->add_option("--t", t, "outer power")->required();
    cmd_pl->add_option("--d", d, "inner power")->required();

    auto* cmd_pv = app.add_subcommand("plethysm-verify", "recurrence against the character oracle");
    cmd_pv->add_option("--dim", dim_v, "dim V: 2, 3, or 4")->required();
    cmd_pv->add_option("--t", t, "outer power")->required();
    cmd_pv->add_option("--d", d, "inner power")->required();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error(usage): " << e.what() << "\n";
        return 2;
    }

    drnc_options opts = to_options(g);

    if (cmd_rnc->parsed()) {
        drnc_ideal* ideal = nullptr;
        check(drnc_rnc_ideal(d, &opts, &ideal));
        print_ideal(ideal);
        return 0;
    }
    if (cmd_double->parsed()) {
        drnc_ideal* ideal = nullptr;
        check(drnc_double_curve_ideal(d, &opts, nullptr, &ideal));
        print_ideal(ideal);
        return 0;
    }
    if (cmd_veronese->parsed()) {
        drnc_ideal* ideal = nullptr;
        check(drnc_veronese_ideal(n, d, &opts, &ideal));
        print_ideal(ideal);
        return 0;
    }
    if (cmd_resolve->parsed()) {
        std::string text = read_input(g);
        drnc_ideal* ideal = nullptr;
        check(drnc_ideal_parse(text.c_str(), &opts, g.graded ? 1 : 0, &ideal));
        resolve_and_print(ideal, g);
        return 0;
    }
    if (cmd_hilbert->parsed()) {
        std::string text = read_input(g);
        drnc_ideal* ideal = nullptr;
        check(drnc_ideal_parse(text.c_str(), &opts, g.graded ? 1 : 0, &ideal));
        drnc_hilbert_data* h = nullptr;
        check(drnc_hilbert(ideal, &h));
        char* nume = nullptr;
        char* poly = nullptr;
        check(drnc_hilbert_numerator_text(h, &nume));
        check(drnc_hilbert_polynomial_text(h, &poly));
        if (g.json) {
            std::cout << "{\"numerator\": \"" << take_string(nume) << "\", \"hilbert_polynomial\": \""
                      << take_string(poly) << "\"}\n";
        } else {
            std::cout << "numerator: " << take_string(nume) << "\n";
            std::cout << "H(t) = " << take_string(poly) << "\n";
        }
        drnc_hilbert_free(h);
        drnc_ideal_free(ideal);
        return 0;
    }
    if (cmd_vd->parsed()) {
        char* report = nullptr;
        int pass = 0;
        check(drnc_verify_double(d, &opts, &report, &pass));
        return report_exit(report, pass);
    }
    if (cmd_vr->parsed()) {
        char* report = nullptr;
        int pass = 0;
        check(drnc_verify_rnc(dmin, dmax, &opts, &report, &pass));
        return report_exit(report, pass);
    }
    if (cmd_vl->parsed()) {
        char* report = nullptr;
        int pass = 0;
        check(drnc_verify_lemma1(&opts, &report, &pass));
        return report_exit(report, pass);
    }
    if (cmd_vc->parsed()) {
        char* report = nullptr;
        int pass = 0;
        check(drnc_verify_castelnuovo(g.seed, &opts, &report, &pass));
        return report_exit(report, pass);
    }
    if (cmd_pl->parsed()) {
        drnc_decomp* dec = nullptr;
        check(drnc_plethysm(dim_v, t, d, &dec));
        char* text = nullptr;
        check(g.json ? drnc_decomp_json(dec, &text) : drnc_decomp_text(dec, &text));
        std::cout << take_string(text) << "\n";
        drnc_decomp_free(dec);
        return 0;
    }
    if (cmd_pv->parsed()) {
        char* report = nullptr;
        int pass = 0;
        check(drnc_plethysm_verify(dim_v, t, d, &report, &pass));
        return report_exit(report, pass);
    }
    std::cerr << "error(usage): unknown command\n";
    return 2;
}
