#pragma once

// Explicit constants for the growth bounds on horocyclic elements of B(n):
//
//   (i)  min(|f|, denom f) <= M |p|^{nc/4}
//   (ii) max(|f|, denom f) <= M |p|^{nc/2}
//
// for every (f, 0) in B(n). Fractional powers of |p| are never evaluated;
// every inequality is raised to the 4th (or 2nd) power and compared exactly.

#include <cstdint>

#include <gmpxx.h>

#include "bsac/bs_group.hpp"
#include "bsac/generating_set.hpp"

namespace bsac {

struct Constants {
    BaseP p;
    std::int64_t c = 0;       // max t-exponent over the generators
    mpq_class f_star_abs{0};  // max |f_i|
    mpz_class f_dstar{1};     // max denom(f_i)
    std::int64_t ell = 0;     // l_C(1,0)
    std::int64_t eps = 0;     // max l_C(0,i), |i| <= c/2

    // kappa = max_{n>=0} n |p|^{-nc/4}, attained at kappa_argmax. kappa is in
    // general irrational; kappa_pow4 holds kappa^4 exactly and kappa_upper is
    // the least multiple of 1/kKappaResolution that is >= kappa (kappa itself
    // when kappa is rational).
    std::int64_t kappa_argmax = 0;
    mpq_class kappa_pow4{0};
    mpq_class kappa_upper{0};
    bool kappa_exact = false;

    mpq_class geometric{0};  // 2|p|^c / (|p|^c - 1)
    mpq_class m_prime{0};    // f_star_abs * (kappa_upper + geometric)
    mpq_class M{0};          // max(m_prime, f_dstar)
};

inline const mpz_class kKappaResolution{1000000000000};

Constants derived_constants(const GeneratingSet& gens);

/// True iff M |p|^{c(k + (2 ell + eps)/4 - j/4)} <= |p|^{kc - 1}.
bool midpoint_bound_holds(const Constants& K, std::int64_t j, std::int64_t k);

/// The least j >= 1 for which midpoint_bound_holds for every k; the bound
/// reduces to the k-free  M^4 |p|^{c(2 ell + eps) - cj + 4} <= 1.
std::int64_t choose_j(const Constants& K);

/// Lower bound on d_C(h, h2) for horocyclic h, h2 implied by
///   max(||h| - |h2||, |denom h - denom h2|) <= M |p|^{dc/2}.
/// Represents r* = max(0, (2/c) log_|p| (delta / M)) exactly through delta.
class DistanceLowerBound {
public:
    DistanceLowerBound(mpq_class delta, const Constants& K);

    const mpq_class& delta() const { return delta_; }
    /// d >= r*, decided exactly.
    bool admits(std::int64_t d) const;
    /// The least integer d >= r*; every path from h to h2 has at least this length.
    std::int64_t ceil() const;
    /// Floating rendering of r*; for display only.
    double approx() const;

private:
    mpq_class delta_{0};
    mpq_class m_sq_{0};
    BaseP p_;
    std::int64_t c_;
};

/// Throws PreconditionError unless both arguments are horocyclic.
DistanceLowerBound distance_lower_bound(const GroupElement& h, const GroupElement& h2, const Constants& K);

}  // namespace bsac
