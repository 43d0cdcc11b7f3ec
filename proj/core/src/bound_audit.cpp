#include "bsac/bound_audit.hpp"

#include <algorithm>

#include "bsac/errors.hpp"

namespace bsac {

SizeBoundReport audit_size_bound(std::int64_t n, const Constants& K, const Ball& ball) {
    if (n < 0 || ball.radius() < n) throw PreconditionError("audit_size_bound: ball radius below n");
    const BaseP& p = K.p;
    SizeBoundReport report;
    report.n = n;

    const mpq_class m2 = K.M * K.M;
    const mpq_class scale = p.abs_pow_q(n * K.c);
    const mpq_class dichotomy_bound = m2 * m2 * scale;  // M^4 |p|^{nc}
    const mpq_class joint_bound = m2 * scale;           // M^2 |p|^{nc}

    const std::size_t count = ball.size_within(n);
    for (std::uint32_t i = 0; i < count; ++i) {
        const GroupElement& g = ball.element(i);
        if (!g.is_horocyclic()) continue;
        ++report.checked;
        const mpq_class size = abs_value(g.f, p);
        const mpq_class den(denom(g.f, p));
        const mpq_class lo = std::min(size, den);
        const mpq_class hi = std::max(size, den);

        mpq_class lo2 = lo * lo;
        const mpq_class r4 = lo2 * lo2 / dichotomy_bound;
        const mpq_class r2 = hi * hi / joint_bound;
        if (r4 > report.max_dichotomy_ratio4) {
            report.max_dichotomy_ratio4 = r4;
            report.dichotomy_argmax = g;
        }
        if (r2 > report.max_joint_ratio2) {
            report.max_joint_ratio2 = r2;
            report.joint_argmax = g;
        }
        if (r4 > 1) report.violations.push_back({g, identity(), "min(|f|, denom f) > M |p|^{nc/4}"});
        if (size * size > joint_bound) report.violations.push_back({g, identity(), "|f| > M |p|^{nc/2}"});
        if (den * den > joint_bound) report.violations.push_back({g, identity(), "denom f > M |p|^{nc/2}"});
    }
    return report;
}

LipschitzReport audit_lipschitz(std::int64_t r, const Constants& K, const Ball& ball, const Ball& distance_ball) {
    if (r < 0 || distance_ball.radius() < r) throw PreconditionError("audit_lipschitz: distance ball radius below r");
    const BaseP& p = K.p;
    LipschitzReport report;
    report.r = r;
    report.n = ball.radius();

    std::vector<std::uint32_t> offsets;
    for (std::uint32_t i = 1; i < distance_ball.size_within(r); ++i) {
        if (distance_ball.element(i).is_horocyclic()) offsets.push_back(i);
    }
    const mpq_class m2 = K.M * K.M;

    for (std::uint32_t i = 0; i < ball.size(); ++i) {
        const GroupElement& h = ball.element(i);
        if (!h.is_horocyclic()) continue;
        const mpq_class h_abs = abs_value(h.f, p);
        const mpz_class h_den = denom(h.f, p);
        for (std::uint32_t w : offsets) {
            GroupElement h2{add(h.f, distance_ball.element(w).f, p), 0};
            if (canonical_order(h, h2) >= 0 || !ball.contains(h2)) continue;
            ++report.pairs_checked;
            const std::int64_t d = distance_ball.length(w);
            const mpq_class bound = m2 * p.abs_pow_q(d * K.c);
            const mpq_class abs_gap = abs(h_abs - abs_value(h2.f, p));
            const mpq_class den_gap(abs(h_den - denom(h2.f, p)));
            const mpq_class gap = std::max(abs_gap, den_gap);
            const mpq_class ratio = gap * gap / bound;
            if (ratio > report.max_ratio2) {
                report.max_ratio2 = ratio;
                report.argmax_g = h;
                report.argmax_h = h2;
            }
            if (abs_gap * abs_gap > bound) report.violations.push_back({h, h2, "||h| - |h'|| > M |p|^{dc/2}"});
            if (den_gap * den_gap > bound) report.violations.push_back({h, h2, "|denom h - denom h'| > M |p|^{dc/2}"});
        }
    }
    return report;
}

void require_clean(const SizeBoundReport& report) {
    if (report.passed()) return;
    const auto& v = report.violations.front();
    throw AuditViolation("size bound violated at n=" + std::to_string(report.n) + " by " + to_flag_string(v.g) +
                         ": " + v.clause);
}

void require_clean(const LipschitzReport& report) {
    if (report.passed()) return;
    const auto& v = report.violations.front();
    throw AuditViolation("Lipschitz bound violated at r=" + std::to_string(report.r) + " by " +
                         to_flag_string(v.g) + ", " + to_flag_string(v.h) + ": " + v.clause);
}

}  // namespace bsac
