#include "bsac/generating_set.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "bsac/errors.hpp"
#include "bsac/metric.hpp"

namespace bsac {

GeneratingSet validate_generating_set(const BaseP& p, std::span<const GroupElement> raw,
                                      const ValidationOptions& options) {
    if (raw.empty()) throw GenerationError("cannot generate: empty generator list");

    GeneratingSet set(p);
    std::unordered_map<GroupElement, std::uint32_t> seen;
    auto add_gen = [&](const GroupElement& g) {
        if (g == identity() || seen.contains(g)) return;
        seen.emplace(g, static_cast<std::uint32_t>(set.gens_.size()));
        set.gens_.push_back(g);
    };
    for (const auto& g : raw) add_gen(g);
    set.supplied_ = set.gens_.size();
    for (std::size_t i = 0; i < set.supplied_; ++i) add_gen(inverse(set.gens_[i], p));
    set.inverse_.resize(set.gens_.size());
    for (std::size_t i = 0; i < set.gens_.size(); ++i) {
        set.inverse_[i] = seen.at(inverse(set.gens_[i], p));
    }

    if (set.gens_.empty()) throw GenerationError("cannot generate: only identity elements given");
    for (std::uint32_t i = 0; i < set.gens_.size(); ++i) {
        const auto& g = set.gens_[i];
        if (g.c > set.c_max_) {
            set.c_max_ = g.c;
            set.f_star_gen_ = i;
        }
        set.f_star_abs_ = std::max(set.f_star_abs_, abs_value(g.f, p));
        set.f_dstar_ = std::max(set.f_dstar_, denom(g.f, p));
    }
    if (set.c_max_ <= 0) {
        throw GenerationError("cannot generate: no generator has a nonzero t-exponent");
    }

    // (1,0) and (0,1) generate the group, so reaching both confirms generation.
    const std::int64_t R = options.generation_radius;
    WordMetric metric(set, (R + 1) / 2, BallOptions{options.memory_budget_bytes});
    const GroupElement a{PFraction(1), 0};
    const GroupElement t{PFraction(0), 1};
    const WordLength la = metric.length(a, R);
    const WordLength lt = metric.length(t, R);
    if (!la.found() || !lt.found()) {
        throw GenerationError("generation unconfirmed at radius " + std::to_string(R));
    }
    set.ell_ = *la.length;

    // Every (0,i) is reachable now; widen the search until it is found.
    set.eps_ = 0;
    for (std::int64_t i = -set.c_max_ / 2; i <= set.c_max_ / 2; ++i) {
        const GroupElement ti{PFraction(0), i};
        std::int64_t max_r = std::max<std::int64_t>(R, 1);
        WordLength li = metric.length(ti, max_r);
        while (!li.found()) {
            max_r *= 2;
            li = metric.length(ti, max_r);
        }
        set.eps_ = std::max(set.eps_, *li.length);
    }
    return set;
}

GeneratingSet standard_generators(const BaseP& p) {
    const GroupElement raw[] = {{PFraction(1), 0}, {PFraction(0), 1}};
    return validate_generating_set(p, raw);
}

}  // namespace bsac
