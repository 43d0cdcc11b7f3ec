#include "bsac/bs_group.hpp"

#include "bsac/errors.hpp"

namespace bsac {

std::strong_ordering canonical_order(const GroupElement& a, const GroupElement& b) {
    if (a.c != b.c) return a.c <=> b.c;
    return canonical_order(a.f, b.f);
}

GroupElement identity() { return {}; }

GroupElement multiply(const GroupElement& g, const GroupElement& h, const BaseP& p) {
    return {add(g.f, scale_p_pow(h.f, -g.c, p), p), g.c + h.c};
}

GroupElement inverse(const GroupElement& g, const BaseP& p) {
    return {negate(scale_p_pow(g.f, g.c, p)), -g.c};
}

GroupElement power(const GroupElement& g, std::int64_t k, const BaseP& p) {
    GroupElement base = k < 0 ? inverse(g, p) : g;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    GroupElement result = identity();
    while (n != 0) {
        if (n & 1u) result = multiply(result, base, p);
        n >>= 1;
        if (n != 0) base = multiply(base, base, p);
    }
    return result;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h, const BaseP& p) {
    return multiply(multiply(inverse(h, p), g, p), h, p);
}

GroupElement word_product(std::span<const std::uint32_t> word, std::span<const GroupElement> gens, const BaseP& p) {
    PFraction sum;
    std::int64_t shift = 0;  // c_1 + ... + c_{i-1}
    for (std::uint32_t idx : word) {
        if (idx >= gens.size()) {
            throw MalformedWord("generator index " + std::to_string(idx) + " out of range for " +
                                std::to_string(gens.size()) + " generators");
        }
        const GroupElement& s = gens[idx];
        sum = add(sum, scale_p_pow(s.f, -shift, p), p);
        shift += s.c;
    }
    return {std::move(sum), shift};
}

std::string to_string(const GroupElement& g, const BaseP& p) {
    return "(" + to_string(g.f, p) + ", " + std::to_string(g.c) + ")";
}

std::string to_flag_string(const GroupElement& g) {
    return g.f.num().get_str() + "/" + std::to_string(g.f.exp()) + ":" + std::to_string(g.c);
}

}  // namespace bsac
