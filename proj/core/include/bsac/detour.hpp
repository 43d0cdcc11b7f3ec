#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bsac/ball.hpp"
#include "bsac/generating_set.hpp"

namespace bsac {

/// N(n,k): the largest inside-ball distance between members of B(n) at
/// global distance <= k, and the canonically first pair attaining it.
struct DetourRow {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t N = 0;
    std::int64_t max_pair_distance = 0;  // largest d_C over qualifying pairs
    std::size_t pairs = 0;
    std::optional<GroupElement> witness_g;
    std::optional<GroupElement> witness_h;
};

struct DetourTable {
    std::vector<DetourRow> rows;
    /// Set when the memory budget stopped construction short of n_max.
    std::optional<std::int64_t> budget_limited_at;
};

struct DetourOptions {
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
    unsigned workers = 1;
};

/// Rows for n = 0..n_max from a single ball. Output is independent of
/// `workers`.
DetourTable ac_table(std::int64_t n_max, std::int64_t k, const GeneratingSet& gens, const DetourOptions& options = {});

/// One row, from an existing ball of radius >= n.
DetourRow detour_row(const Ball& ball, std::int64_t n, std::int64_t k, unsigned workers = 1);

}  // namespace bsac
