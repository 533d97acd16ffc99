// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef DRNC_CORE_ERROR_HPP
#define DRNC_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace drnc {

enum class Errc {
    invalid_argument,
    parse,
    ring_mismatch,
    inhomogeneous,
    guard,
    truncated,
    verify,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace drnc

#endif
