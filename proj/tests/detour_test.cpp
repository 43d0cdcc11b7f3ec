#include "bsac/detour.hpp"

#include <gtest/gtest.h>

#include "bsac/errors.hpp"
#include "bsac/metric.hpp"
#include "support/oracle.hpp"
#include "support/printers.hpp"

namespace bsac {
namespace {

GroupElement el(long num, std::uint64_t exp, std::int64_t c, const BaseP& p) {
    return {normalize(mpz_class(num), exp, p), c};
}

// Brute-force N(n,k) straight from the definition.
std::int64_t oracle_detour(int n, int k, long pv) {
    const auto gens = oracle::standard_gens();
    const auto big = oracle::ball(n + k, gens, pv);
    const auto b = oracle::ball(n, gens, pv);
    std::int64_t best = 0;
    for (const auto& [g, lg] : b) {
        for (const auto& [h, lh] : b) {
            if (!(g < h)) continue;
            const auto it = big.find(oracle::mul(oracle::inv(g, pv), h, pv));
            if (it == big.end() || it->second > k) continue;
            best = std::max<std::int64_t>(best, *oracle::inside_distance(b, n, g, h, gens, pv));
        }
    }
    return best;
}

TEST(DetourTest, FrozenTableP2) {
    const BaseP p(2);
    const std::vector<std::int64_t> expect{0, 2, 2, 3, 3, 3, 6, 7, 7, 11, 11, 16, 16};
    const auto table = ac_table(12, 2, standard_generators(p));
    ASSERT_EQ(table.rows.size(), expect.size());
    EXPECT_FALSE(table.budget_limited_at.has_value());
    for (std::size_t n = 0; n < expect.size(); ++n) {
        EXPECT_EQ(table.rows[n].n, static_cast<std::int64_t>(n));
        EXPECT_EQ(table.rows[n].N, expect[n]) << "n=" << n;
    }
    EXPECT_EQ(table.rows[0].pairs, 0u);
    EXPECT_FALSE(table.rows[0].witness_g.has_value());
    // t^-1 is canonically first; its first partner at inside distance 2 is a^-1
    EXPECT_EQ(table.rows[1].witness_g, el(0, 0, -1, p));
    EXPECT_EQ(table.rows[1].witness_h, el(-1, 0, 0, p));
}

TEST(DetourTest, WitnessPairsAttainNPerOracle) {
    const long pv = 2;
    const BaseP p(pv);
    const auto table = ac_table(7, 2, standard_generators(p));
    const auto gens = oracle::standard_gens();
    for (int n = 1; n <= 7; ++n) {
        const auto& row = table.rows[n];
        ASSERT_TRUE(row.witness_g && row.witness_h);
        const oracle::Elem g{to_rational(row.witness_g->f, p), static_cast<long>(row.witness_g->c)};
        const oracle::Elem h{to_rational(row.witness_h->f, p), static_cast<long>(row.witness_h->c)};
        const auto b = oracle::ball(n, gens, pv);
        EXPECT_EQ(oracle::inside_distance(b, n, g, h, gens, pv), row.N) << "n=" << n;
        const auto small = oracle::ball(2, gens, pv);
        EXPECT_TRUE(small.count(oracle::mul(oracle::inv(g, pv), h, pv))) << "n=" << n;
    }
}

TEST(DetourTest, MatchesOracle) {
    for (long pv : {2L, 3L}) {
        const auto table = ac_table(5, 2, standard_generators(BaseP(pv)));
        for (int n = 0; n <= 5; ++n) EXPECT_EQ(table.rows[n].N, oracle_detour(n, 2, pv)) << pv << " n=" << n;
    }
    const auto k3 = ac_table(4, 3, standard_generators(BaseP(2)));
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(k3.rows[n].N, oracle_detour(n, 3, 2)) << "k=3 n=" << n;
}

TEST(DetourTest, RowInvariants) {
    const auto C = standard_generators(BaseP(3));
    const auto table = ac_table(8, 2, C);
    for (const auto& row : table.rows) {
        EXPECT_GE(row.N, row.max_pair_distance);
        EXPECT_LE(row.N, 2 * row.n);
        if (row.n >= 1) {
            EXPECT_EQ(row.max_pair_distance, 2);
        }
    }
}

TEST(DetourTest, WitnessPairAttainsN) {
    const BaseP p(2);
    const auto C = standard_generators(p);
    const Ball B = ball(9, C);
    const auto row = detour_row(B, 9, 2);
    const Ball B9 = ball(9, C);
    EXPECT_EQ(inside_ball_distance(*row.witness_g, *row.witness_h, B9), row.N);
    EXPECT_LE(*B.length_of(multiply(inverse(*row.witness_g, p), *row.witness_h, p)), 2);
}

TEST(DetourTest, WorkerCountDoesNotChangeRows) {
    const auto C = standard_generators(BaseP(2));
    const Ball B = ball(10, C);
    for (std::int64_t n : {4, 7, 10}) {
        const auto one = detour_row(B, n, 2, 1);
        for (unsigned w : {2u, 3u, 8u}) {
            const auto many = detour_row(B, n, 2, w);
            EXPECT_EQ(many.N, one.N);
            EXPECT_EQ(many.pairs, one.pairs);
            EXPECT_EQ(many.witness_g, one.witness_g);
            EXPECT_EQ(many.witness_h, one.witness_h);
        }
    }
}

TEST(DetourTest, BudgetTruncatesTable) {
    const auto table = ac_table(14, 2, standard_generators(BaseP(2)), DetourOptions{.memory_budget_bytes = 200000});
    ASSERT_TRUE(table.budget_limited_at.has_value());
    EXPECT_EQ(static_cast<std::int64_t>(table.rows.size()), *table.budget_limited_at + 1);
}

TEST(DetourTest, RejectsShortBall) {
    const Ball B = ball(3, standard_generators(BaseP(2)));
    EXPECT_THROW(detour_row(B, 4, 2), PreconditionError);
}

}  // namespace
}  // namespace bsac
