#pragma once

// Witness elements for the failure of almost convexity. With g0 = (f_*, c)
// the generator of maximal t-exponent and a = (1,0):
//
//   T_k = g0^-k a g0^k = (p^{ck}, 0)      S_k = g0^k a g0^-k = (p^{-ck}, 0)
//   alpha = S_k T_k g0^-j                 beta = T_k S_k g0^j
//
// alpha and beta lie in B(4k + 2 ell - j) at distance 2j, yet any path between
// them inside that ball must cross t-level |i| <= c/2 at a point whose
// projection P is far from S_k T_k once k is large.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bsac/ball.hpp"
#include "bsac/constants.hpp"
#include "bsac/metric.hpp"

namespace bsac {

struct WitnessFamily {
    std::int64_t k = 0;
    std::int64_t j = 0;
    std::uint32_t g0 = 0;  // generator index of (f_*, c)
    GroupElement T;
    GroupElement S;
    GroupElement ST;
    GroupElement alpha;
    GroupElement beta;
    std::int64_t radius = 0;  // 4k + 2 ell - j
    Word a_word;              // geodesic word for (1,0)
    Word alpha_word;          // g0^k a g0^-2k a g0^{k-j}
    Word beta_word;           // g0^-k a g0^2k a g0^{-(k-j)}
};

/// Throws PreconditionError unless k > j >= 1.
WitnessFamily build_witnesses(std::int64_t k, std::int64_t j, const GeneratingSet& gens);

struct WitnessAuditOptions {
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
    /// Also confirm d(alpha, beta) = 2j by breadth-first search.
    bool confirm_distance_by_search = true;
};

struct Midpoint {
    GroupElement p_prime;  // first path vertex with |t-exponent| <= c/2
    std::size_t path_position = 0;
    std::int64_t level = 0;  // its t-exponent i
    Word projection_word;    // geodesic word for (0, -i)
    GroupElement P;          // p_prime (0,-i), horocyclic
    WordLength distance_to_st;
    DistanceLowerBound lower_bound;
};

struct WitnessReport {
    WitnessFamily family;
    // (1) membership
    std::optional<std::int64_t> alpha_length;
    std::optional<std::int64_t> beta_length;
    // (2) d(alpha, beta), bracketed by the t-exponent bound and the word g0^{2j}
    std::int64_t distance_lower = 0;
    std::int64_t distance_upper = 0;
    std::optional<std::int64_t> distance_searched;
    // (3) shortest path inside B(radius)
    std::optional<std::int64_t> inside_distance;
    std::vector<GroupElement> inside_path;
    // (4) projected midpoint
    std::optional<Midpoint> midpoint;

    /// Largest ball radius built; below family.radius when the budget ran out.
    std::int64_t completed_radius = 0;
    bool complete = false;
    std::string note;
};

WitnessReport witness_audit(const WitnessFamily& family, const GeneratingSet& gens, const Constants& K,
                            const WitnessAuditOptions& options = {});

/// Ball-free certificate at level k: with threshold |p|^{kc-1}, any
/// horocyclic P with |P| <= threshold or denom P <= threshold is at least
/// `bound` away from S_k T_k, because
///   |S_k T_k| - threshold >= threshold   and   denom(S_k T_k) - threshold >= threshold.
struct GrowthCertificate {
    std::int64_t k = 0;
    std::int64_t j = 0;
    GroupElement ST;
    mpz_class threshold;
    bool midpoint_bound = false;  // midpoint_bound_holds(K, j, k)
    mpq_class abs_gap;            // |S_k T_k| - threshold
    mpz_class denom_gap;          // denom(S_k T_k) - threshold
    bool abs_branch = false;      // abs_gap >= threshold
    bool denom_branch = false;    // denom_gap >= threshold
    DistanceLowerBound bound;     // from delta = threshold

    bool holds() const { return midpoint_bound && abs_branch && denom_branch; }
};

GrowthCertificate certify_growth(std::int64_t k, std::int64_t j, const Constants& K);

}  // namespace bsac
