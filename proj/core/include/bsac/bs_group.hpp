#pragma once

// The group B(1,p) = Z[1/p] x| Z. Elements are pairs (f, c) with the law
//
//     (f1, c1) (f2, c2) = (f1 + f2 p^{-c1}, c1 + c2)
//
// so that with a = (1,0) and t = (0,1) the relation t^-1 a t = a^p holds.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsac/zp_arith.hpp"

namespace bsac {

struct GroupElement {
    PFraction f;        // horocyclic coordinate
    std::int64_t c = 0; // t-exponent

    bool is_horocyclic() const { return c == 0; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Canonical order: (c, exp, num) lexicographically.
std::strong_ordering canonical_order(const GroupElement& a, const GroupElement& b);

struct CanonicalLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const { return canonical_order(a, b) < 0; }
};

/// Word over a generating set: indices into its generator list.
using Word = std::vector<std::uint32_t>;

GroupElement identity();
GroupElement multiply(const GroupElement& g, const GroupElement& h, const BaseP& p);
GroupElement inverse(const GroupElement& g, const BaseP& p);
GroupElement power(const GroupElement& g, std::int64_t k, const BaseP& p);
/// h^-1 g h
GroupElement conjugate(const GroupElement& g, const GroupElement& h, const BaseP& p);

/// Evaluates a product g_{w_0} g_{w_1} ... via the closed summation
///   (sum_i f_i p^{-(c_1 + ... + c_{i-1})}, sum_i c_i).
/// Throws MalformedWord if an index is out of range.
GroupElement word_product(std::span<const std::uint32_t> word, std::span<const GroupElement> gens, const BaseP& p);

/// "(m/p^e, c)"
std::string to_string(const GroupElement& g, const BaseP& p);
/// "num/exp:c", the command-line element syntax.
std::string to_flag_string(const GroupElement& g);

}  // namespace bsac

template <>
struct std::hash<bsac::GroupElement> {
    std::size_t operator()(const bsac::GroupElement& g) const noexcept {
        std::size_t h = g.f.hash();
        return h ^ (std::hash<std::int64_t>{}(g.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
