// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed CLI binary (path in $DRNC_CLI) end to end: output
// formats, exit codes, JSON schema conformance, and determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using nlohmann::json;

std::string cli_path() {
    const char* p = std::getenv("DRNC_CLI");
    REQUIRE_MESSAGE(p != nullptr, "DRNC_CLI must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd = cli_path() + " " + args;
    if (!stdin_data.empty()) {
        std::string tmp = "cli_stdin.tmp";
        std::ofstream f(tmp);
        f << stdin_data;
        f.close();
        cmd += " < " + tmp;
    }
    cmd += " 2> cli_stderr.tmp";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), ("missing file: " + path).c_str());
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::string source_dir() {
    const char* p = std::getenv("DRNC_SOURCE_DIR");
    REQUIRE_MESSAGE(p != nullptr, "DRNC_SOURCE_DIR must point at the repository root");
    return p;
}

// Structural validation mirroring the published draft-07 schemas.
void check_betti_schema(const json& doc) {
    REQUIRE(doc.is_object());
    REQUIRE(doc.size() == 1);
    REQUIRE(doc.contains("entries"));
    const auto& entries = doc["entries"];
    REQUIRE(entries.is_array());
    std::string prev;
    for (const auto& e : entries) {
        REQUIRE(e.is_array());
        REQUIRE(e.size() == 3);
        for (const auto& x : e) REQUIRE(x.is_number_integer());
        CHECK(e[2].get<std::int64_t>() > 0);
        std::string key = e.dump();
        CHECK(prev < key); // sorted
        prev = key;
    }
}

void check_decomp_schema(const json& doc) {
    REQUIRE(doc.is_object());
    REQUIRE(doc.size() == 2);
    REQUIRE(doc.contains("dim_v"));
    REQUIRE(doc["dim_v"].is_number_integer());
    CHECK(doc["dim_v"].get<int>() >= 1);
    REQUIRE(doc.contains("terms"));
    for (const auto& term : doc["terms"]) {
        REQUIRE(term.is_array());
        REQUIRE(term.size() == 2);
        const auto& partition = term[0];
        REQUIRE(partition.is_array());
        int prev = 1 << 30;
        for (const auto& part : partition) {
            REQUIRE(part.is_number_integer());
            int v = part.get<int>();
            CHECK(v >= 1);
            CHECK(v <= prev);
            prev = v;
        }
        REQUIRE(term[1].is_number_integer());
        CHECK(term[1].get<std::int64_t>() >= 1);
    }
}

} // namespace

TEST_CASE("double --d 2 prints the printed ideal verbatim") {
    auto r = run_cli("double --d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "vars: x, y, z, u, v\n"
          "x*z - y^2\n"
          "x*u - y*v\n"
          "y*u - z*v\n"
          "u^2\n"
          "u*v\n"
          "v^2\n");
}

TEST_CASE("rnc and veronese constructions print parseable ideals") {
    auto r = run_cli("rnc --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("vars: z0, z1, z2, z3\n", 0) == 0);

    auto v = run_cli("veronese --n 2 --d 2");
    CHECK(v.exit_code == 0);
    // feeding the printed ideal back through resolve round-trips
    auto res = run_cli("resolve --json", v.out);
    CHECK(res.exit_code == 0);
    json doc = json::parse(res.out);
    check_betti_schema(doc);
    CHECK(doc["entries"].dump() == "[[0,0,1],[1,2,6],[2,3,8],[3,4,3]]");
}

TEST_CASE("resolve reads stdin and respects --max-length") {
    auto r = run_cli("resolve", "vars: x, y, z\nx*z - y^2\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0:") != std::string::npos);
    auto t = run_cli("resolve --max-length 1 --json", read_file(source_dir() + "/tests/data/veronese22.ideal"));
    CHECK(t.exit_code == 0);
}

TEST_CASE("hilbert output in both modes") {
    auto r = run_cli("hilbert", "vars: x, y, z\nx*z - y^2\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "numerator: 1 - t^2\nH(t) = 2*t + 1\n");
    auto j = run_cli("hilbert --json", "vars: x, y, z\nx*z - y^2\n");
    CHECK(j.exit_code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["hilbert_polynomial"] == "2*t + 1");
}

TEST_CASE("exit code contract") {
    // 0: verification pass
    CHECK(run_cli("verify-double --d 1").exit_code == 0);
    // 2: unknown command
    CHECK(run_cli("frobnicate").exit_code == 2);
    // 2: parse error with its message prefix
    auto p = run_cli("resolve", "vars: x\nx + q\n");
    CHECK(p.exit_code == 2);
    CHECK(read_file("cli_stderr.tmp").rfind("error(parse):", 0) == 0);
    // 2: strict grading rejection
    CHECK(run_cli("resolve --graded", "vars: x\nx + 1\n").exit_code == 2);
    // 2: guard violation with its message prefix
    auto gg = run_cli("veronese --n 3 --d 4");
    CHECK(gg.exit_code == 2);
    CHECK(read_file("cli_stderr.tmp").rfind("error(guard):", 0) == 0);
    // 2: bad flag value
    CHECK(run_cli("resolve --order mystery", "vars: x\nx\n").exit_code == 2);
}

TEST_CASE("plethysm output and schema") {
    auto r = run_cli("plethysm --dim 2 --t 3 --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "S9 + S5 + S3\n");

    auto j = run_cli("plethysm --dim 3 --t 3 --d 2 --json");
    CHECK(j.exit_code == 0);
    check_decomp_schema(json::parse(j.out));

    CHECK(run_cli("plethysm-verify --dim 3 --t 4 --d 2").exit_code == 0);
    CHECK(run_cli("plethysm --dim 5 --t 2 --d 2").exit_code == 2);
}

TEST_CASE("verify suites pass and respect field flags") {
    CHECK(run_cli("verify-rnc --dmin 2 --dmax 4").exit_code == 0);
    CHECK(run_cli("verify-double --d 2 --rationals").exit_code == 0);
    CHECK(run_cli("verify-double --d 2 --char 101").exit_code == 0);
}

TEST_CASE("published schema files are valid JSON") {
    json betti = json::parse(read_file(source_dir() + "/schemas/betti.schema.json"));
    CHECK(betti["title"] == "BettiTable");
    json decomp = json::parse(read_file(source_dir() + "/schemas/decomp.schema.json"));
    CHECK(decomp["title"] == "Decomp");
}

TEST_CASE("identical invocations are byte-identical") {
    for (std::string cmd : {std::string("verify-lemma1"), std::string("plethysm --dim 4 --t 4 --d 2"),
                            std::string("verify-castelnuovo --seed 7")}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
