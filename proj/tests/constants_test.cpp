#include "bsac/constants.hpp"

#include <gtest/gtest.h>

#include "bsac/errors.hpp"
#include "bsac/generating_set.hpp"
#include "bsac/metric.hpp"
#include "support/printers.hpp"

namespace bsac {
namespace {

GroupElement el(long num, std::uint64_t exp, std::int64_t c, const BaseP& p) {
    return {normalize(mpz_class(num), exp, p), c};
}

mpq_class q(const char* s) {
    mpq_class v(s);
    v.canonicalize();
    return v;
}

// Independent check of the reduced j inequality M^4 |p|^{c(2 ell + eps) - cj + 4} <= 1.
bool reduced_holds(const Constants& K, std::int64_t j) {
    const std::int64_t e = K.c * (2 * K.ell + K.eps) - K.c * j + 4;
    mpq_class lhs = K.M * K.M * K.M * K.M;
    mpq_class scale = e >= 0 ? mpq_class(K.p.abs_pow(static_cast<std::uint64_t>(e)))
                             : mpq_class(1) / mpq_class(K.p.abs_pow(static_cast<std::uint64_t>(-e)));
    return lhs * scale <= 1;
}

TEST(ConstantsTest, StandardP2) {
    const auto K = derived_constants(standard_generators(BaseP(2)));
    EXPECT_EQ(K.c, 1);
    EXPECT_EQ(K.f_star_abs, 1);
    EXPECT_EQ(K.f_dstar, 1);
    EXPECT_EQ(K.ell, 1);
    EXPECT_EQ(K.eps, 0);
    EXPECT_EQ(K.kappa_argmax, 6);
    EXPECT_EQ(K.kappa_pow4, q("81/4"));
    EXPECT_FALSE(K.kappa_exact);
    EXPECT_EQ(K.kappa_upper, q("2121320343560/1000000000000"));
    EXPECT_EQ(K.geometric, 4);
    EXPECT_EQ(K.M, q("153033008589/25000000000"));
    EXPECT_EQ(choose_j(K), 17);
}

TEST(ConstantsTest, StandardMinus2MatchesP2) {
    const auto K = derived_constants(standard_generators(BaseP(-2)));
    EXPECT_EQ(K.M, q("153033008589/25000000000"));
    EXPECT_EQ(choose_j(K), 17);
}

TEST(ConstantsTest, StandardP3HasRationalKappa) {
    const auto K = derived_constants(standard_generators(BaseP(3)));
    EXPECT_EQ(K.kappa_argmax, 4);
    EXPECT_EQ(K.kappa_pow4, q("256/81"));
    EXPECT_TRUE(K.kappa_exact);
    EXPECT_EQ(K.kappa_upper, q("4/3"));
    EXPECT_EQ(K.M, q("13/3"));
    EXPECT_EQ(choose_j(K), 12);
}

TEST(ConstantsTest, StandardP5) {
    const auto K = derived_constants(standard_generators(BaseP(5)));
    EXPECT_EQ(K.kappa_argmax, 3);
    EXPECT_EQ(K.kappa_pow4, q("81/125"));
    EXPECT_EQ(K.kappa_upper, q("897209268733/1000000000000"));
    EXPECT_EQ(K.M, q("897209268733/1000000000000") + q("5/2"));
    EXPECT_EQ(choose_j(K), 10);
}

TEST(ConstantsTest, KappaUpperBracketsKappa) {
    for (long pv : {2L, 3L, 5L, -3L, 7L}) {
        const auto K = derived_constants(standard_generators(BaseP(pv)));
        const mpq_class up4 = K.kappa_upper * K.kappa_upper * K.kappa_upper * K.kappa_upper;
        EXPECT_GE(up4, K.kappa_pow4) << pv;
        const mpq_class below = K.kappa_upper - mpq_class(1, 1) / mpq_class(kKappaResolution);
        if (!K.kappa_exact) {
            EXPECT_LT(below * below * below * below, K.kappa_pow4) << pv;
        }
        EXPECT_GE(K.M, K.f_dstar);
        EXPECT_GE(K.M, K.m_prime);
    }
}

TEST(ConstantsTest, MDominatesDenominatorOfGenerators) {
    const BaseP p(2);
    const std::vector<GroupElement> raw{el(1, 0, 0, p), el(0, 0, 1, p), el(1, 5, 0, p)};
    const auto K = derived_constants(validate_generating_set(p, raw));
    EXPECT_EQ(K.f_dstar, 32);
    EXPECT_GE(K.M, 32);
}

TEST(ChooseJTest, MinimalAndSatisfiesMidpointBound) {
    for (long pv : {2L, 3L, -2L, 5L}) {
        const auto K = derived_constants(standard_generators(BaseP(pv)));
        const auto j = choose_j(K);
        EXPECT_TRUE(reduced_holds(K, j)) << pv;
        EXPECT_FALSE(reduced_holds(K, j - 1)) << pv;
        for (std::int64_t k = j + 1; k <= j + 4; ++k) EXPECT_TRUE(midpoint_bound_holds(K, j, k)) << pv << " k=" << k;
        EXPECT_FALSE(midpoint_bound_holds(K, j - 1, j + 1)) << pv;
    }
}

TEST(ChooseJTest, UnitConstantGivesLogFreeValue) {
    auto K = derived_constants(standard_generators(BaseP(2)));
    K.M = 1;
    // 2 ell + eps + 4/c
    EXPECT_EQ(choose_j(K), 6);
}

TEST(LowerBoundTest, Examples) {
    const BaseP p(2);
    const auto K = derived_constants(standard_generators(p));
    const auto zero = el(0, 0, 0, p);
    const auto same = distance_lower_bound(zero, zero, K);
    EXPECT_EQ(same.delta(), 0);
    EXPECT_EQ(same.ceil(), 0);
    EXPECT_TRUE(same.admits(0));

    const auto big = distance_lower_bound(el(64, 0, 0, p), zero, K);
    EXPECT_EQ(big.delta(), 64);
    EXPECT_EQ(big.ceil(), 7);
    EXPECT_TRUE(big.admits(7));
    EXPECT_FALSE(big.admits(6));
    EXPECT_NEAR(big.approx(), 6.7723, 1e-3);
    EXPECT_LE(big.ceil(), *word_length(el(64, 0, 0, p), standard_generators(p), 14).length);

    const auto small = distance_lower_bound(el(1, 6, 0, p), zero, K);
    EXPECT_EQ(small.delta(), 63);
    EXPECT_GT(small.approx(), 0);
    EXPECT_LE(small.approx(), big.approx());

    EXPECT_THROW(distance_lower_bound(el(1, 0, 1, p), zero, K), PreconditionError);
}

TEST(LowerBoundTest, CeilIsLeastAdmitted) {
    const auto K = derived_constants(standard_generators(BaseP(3)));
    for (long d = 0; d < 4000; d += 37) {
        const DistanceLowerBound lb(mpq_class(d), K);
        const auto c = lb.ceil();
        EXPECT_TRUE(lb.admits(c));
        if (c > 0) {
            EXPECT_FALSE(lb.admits(c - 1));
        }
    }
}

}  // namespace
}  // namespace bsac
