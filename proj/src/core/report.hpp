// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef DRNC_CORE_REPORT_HPP
#define DRNC_CORE_REPORT_HPP

#include <string>
#include <vector>

namespace drnc {

// Structured verification output: one line per checked clause.
struct Report {
    struct Line {
        std::string name;
        bool pass;
        std::string detail;
    };

    std::string title;
    std::vector<Line> lines;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
    }
    void merge(const Report& other) {
        for (const auto& l : other.lines) lines.push_back(l);
    }
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string render() const {
        std::string out;
        if (!title.empty()) out += "== " + title + " ==\n";
        for (const auto& l : lines) {
            out += (l.pass ? "PASS " : "FAIL ") + l.name;
            if (!l.detail.empty()) out += ": " + l.detail;
            out += "\n";
        }
        out += pass() ? "result: PASS\n" : "result: FAIL\n";
        return out;
    }
};

} // namespace drnc

#endif
