#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bsac/ball.hpp"
#include "bsac/constants.hpp"

namespace bsac {

struct AuditViolationRecord {
    GroupElement g;
    GroupElement h;  // second element for pair audits; identity otherwise
    std::string clause;
};

/// Audit of the size bounds on horocyclic members of B(n).
///
/// Ratios are reported in the powers the comparisons are made in:
///   dichotomy_ratio4 = min(|f|, denom f)^4 / (M^4 |p|^{nc})
///   joint_ratio2     = max(|f|, denom f)^2 / (M^2 |p|^{nc})
/// so each clause holds iff its ratio is <= 1.
struct SizeBoundReport {
    std::int64_t n = 0;
    std::size_t checked = 0;
    mpq_class max_dichotomy_ratio4{0};
    GroupElement dichotomy_argmax;
    mpq_class max_joint_ratio2{0};
    GroupElement joint_argmax;
    std::vector<AuditViolationRecord> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks every horocyclic member of length <= n of `ball` (whose radius
/// must be at least n).
SizeBoundReport audit_size_bound(std::int64_t n, const Constants& K, const Ball& ball);

/// Audit of the Lipschitz bounds between horocyclic h, h' with d_C(h,h') = d:
///   ||h| - |h'||          <= M |p|^{dc/2}
///   |denom h - denom h'|  <= M |p|^{dc/2}
/// Pairs are checked at their exact distance d (<= r), which implies the
/// bound at r. max_ratio2 = max(gap)^2 / (M^2 |p|^{dc}).
struct LipschitzReport {
    std::int64_t r = 0;
    std::int64_t n = 0;
    std::size_t pairs_checked = 0;
    mpq_class max_ratio2{0};
    GroupElement argmax_g;
    GroupElement argmax_h;
    std::vector<AuditViolationRecord> violations;

    bool passed() const { return violations.empty(); }
};

/// Pairs of horocyclic members of `ball` with d_C <= r. Exact distances come
/// from `distance_ball`, which must have radius >= r: since h^-1 h' = (h' - h, 0),
/// every such pair is h' = h + w for a horocyclic w of length <= r.
LipschitzReport audit_lipschitz(std::int64_t r, const Constants& K, const Ball& ball, const Ball& distance_ball);

/// Throws AuditViolation describing the first violation, if any.
void require_clean(const SizeBoundReport& report);
void require_clean(const LipschitzReport& report);

}  // namespace bsac
