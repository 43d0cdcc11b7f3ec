#include "bsac/constants.hpp"

#include <algorithm>
#include <cmath>

#include "bsac/errors.hpp"

namespace bsac {

namespace {

mpq_class pow4(const mpq_class& q) {
    mpq_class sq = q * q;
    return sq * sq;
}

// n^4 |p|^{-nc}, the 4th power of n |p|^{-nc/4}
mpq_class kappa_term_pow4(std::int64_t n, const BaseP& p, std::int64_t c) {
    return pow4(mpq_class(n)) * p.abs_pow_q(-n * c);
}

double log_abs(const mpz_class& z) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

Constants derived_constants(const GeneratingSet& gens) {
    const BaseP& p = gens.p();
    Constants K{.p = p};
    K.c = gens.c_max();
    K.f_star_abs = gens.f_star_abs();
    K.f_dstar = gens.f_dstar();
    K.ell = gens.ell();
    K.eps = gens.eps();

    // n |p|^{-nc/4} is unimodal in n: consecutive ratios (1 + 1/n)|p|^{-c/4}
    // decrease, so the scan stops at the first non-increase.
    std::int64_t n = 1;
    mpq_class best = kappa_term_pow4(1, p, K.c);
    for (;;) {
        mpq_class next = kappa_term_pow4(n + 1, p, K.c);
        if (next <= best) break;
        best = std::move(next);
        ++n;
    }
    K.kappa_argmax = n;
    K.kappa_pow4 = best;

    // Least u with (u / D)^4 >= kappa^4, i.e. u^4 den >= D^4 num.
    const mpz_class D = kKappaResolution;
    const mpz_class target = D * D * D * D * best.get_num();
    const mpz_class& den = best.get_den();
    mpz_class u;
    mpz_class quotient = target / den;
    mpz_root(u.get_mpz_t(), quotient.get_mpz_t(), 4);
    auto u4 = [](const mpz_class& x) {
        mpz_class sq = x * x;
        return mpz_class(sq * sq);
    };
    while (u4(u) * den < target) ++u;
    mpz_class num_root, den_root;
    const bool num_exact = mpz_root(num_root.get_mpz_t(), best.get_num().get_mpz_t(), 4) != 0;
    const bool den_exact = mpz_root(den_root.get_mpz_t(), best.get_den().get_mpz_t(), 4) != 0;
    K.kappa_exact = num_exact && den_exact;
    if (K.kappa_exact) {
        K.kappa_upper = mpq_class(num_root, den_root);
    } else {
        K.kappa_upper = mpq_class(u, D);
    }
    K.kappa_upper.canonicalize();

    const mpz_class q = p.abs_pow(static_cast<std::uint64_t>(K.c));
    K.geometric = mpq_class(2 * q, q - 1);
    K.geometric.canonicalize();
    K.m_prime = K.f_star_abs * (K.kappa_upper + K.geometric);
    K.M = std::max(K.m_prime, mpq_class(K.f_dstar));
    return K;
}

bool midpoint_bound_holds(const Constants& K, std::int64_t j, std::int64_t k) {
    const mpq_class lhs = pow4(K.M) * K.p.abs_pow_q(K.c * (4 * k + 2 * K.ell + K.eps - j));
    const mpq_class rhs = K.p.abs_pow_q(4 * (k * K.c - 1));
    return lhs <= rhs;
}

std::int64_t choose_j(const Constants& K) {
    const mpq_class m4 = pow4(K.M);
    for (std::int64_t j = 1;; ++j) {
        if (m4 * K.p.abs_pow_q(K.c * (2 * K.ell + K.eps) - K.c * j + 4) <= 1) return j;
    }
}

// ---------------------------------------------------------------------------

DistanceLowerBound::DistanceLowerBound(mpq_class delta, const Constants& K)
    : delta_(std::move(delta)), m_sq_(K.M * K.M), p_(K.p), c_(K.c) {}

bool DistanceLowerBound::admits(std::int64_t d) const {
    if (d < 0) return false;
    return delta_ * delta_ <= m_sq_ * p_.abs_pow_q(c_ * d);
}

std::int64_t DistanceLowerBound::ceil() const {
    std::int64_t d = 0;
    while (!admits(d)) ++d;
    return d;
}

double DistanceLowerBound::approx() const {
    if (delta_ == 0) return 0.0;
    // (2/c) log_|p|(delta / M) = (1/c) log_|p|(delta^2 / M^2)
    const mpq_class ratio = delta_ * delta_ / m_sq_;
    const double r = (log_abs(ratio.get_num()) - log_abs(ratio.get_den())) /
                     (static_cast<double>(c_) * std::log(static_cast<double>(p_.abs())));
    return std::max(0.0, r);
}

DistanceLowerBound distance_lower_bound(const GroupElement& h, const GroupElement& h2, const Constants& K) {
    if (!h.is_horocyclic() || !h2.is_horocyclic()) {
        throw PreconditionError("distance_lower_bound: arguments must be horocyclic");
    }
    mpq_class abs_gap = abs(abs_value(h.f, K.p) - abs_value(h2.f, K.p));
    mpq_class denom_gap(abs(denom(h.f, K.p) - denom(h2.f, K.p)));
    return DistanceLowerBound(std::max(abs_gap, denom_gap), K);
}

}  // namespace bsac
