// Copyright (c) 2026 drnc contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef DRNC_CORE_RING_HPP
#define DRNC_CORE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace drnc {

// A graded polynomial ring: named variables with positive integer weights
// (all 1 in the standard grading), a coefficient field, and a monomial order.
template <class K>
class Ring {
public:
    Ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
         std::vector<std::uint32_t> weights = {})
        : field_(std::move(field)), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
        if (names_.empty()) fail(Errc::invalid_argument, "ring needs at least one variable");
        if (weights_.empty()) weights_.assign(names_.size(), 1);
        if (weights_.size() != names_.size())
            fail(Errc::invalid_argument, "weight count does not match variable count");
        for (auto w : weights_)
            if (w == 0) fail(Errc::invalid_argument, "variable weights must be positive");
    }

    const K& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<std::uint32_t>& weights() const { return weights_; }
    bool standard_graded() const {
        for (auto w : weights_)
            if (w != 1) return false;
        return true;
    }

    std::uint64_t degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    int compare(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b, order_, weights_);
    }

    bool same_as(const Ring& o) const {
        return names_ == o.names_ && weights_ == o.weights_ && order_ == o.order_ && field_ == o.field_;
    }

private:
    K field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::vector<std::uint32_t> weights_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> names,
                     MonomialOrder order = MonomialOrder::grevlex(),
                     std::vector<std::uint32_t> weights = {}) {
    return std::make_shared<const Ring<K>>(std::move(field), std::move(names), order, std::move(weights));
}

// Default projective coordinates z0..zn.
inline std::vector<std::string> z_names(std::size_t count) {
    std::vector<std::string> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

template <class K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) fail(Errc::ring_mismatch, "operands live in different rings");
}

} // namespace drnc

#endif
