#include "bsac/detour.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "bsac/errors.hpp"
#include "bsac/metric.hpp"

namespace bsac {

namespace {

struct Best {
    std::int64_t N = 0;
    std::int64_t max_d = 0;
    std::size_t pairs = 0;
    // canonical ranks of the attaining pair; UINT32_MAX when none
    std::uint32_t g_rank = UINT32_MAX;
    std::uint32_t h_rank = UINT32_MAX;
    std::uint32_t g = Ball::npos;
    std::uint32_t h = Ball::npos;

    // Larger N wins; ties go to the canonically first pair.
    void offer(std::int64_t n_val, std::uint32_t gr, std::uint32_t hr, std::uint32_t gi, std::uint32_t hi) {
        if (n_val > N || (n_val == N && (gr < g_rank || (gr == g_rank && hr < h_rank)))) {
            N = n_val;
            g_rank = gr;
            h_rank = hr;
            g = gi;
            h = hi;
        }
    }
    void merge(const Best& o) {
        pairs += o.pairs;
        max_d = std::max(max_d, o.max_d);
        if (o.g != Ball::npos) offer(o.N, o.g_rank, o.h_rank, o.g, o.h);
    }
};

}  // namespace

DetourRow detour_row(const Ball& ball, std::int64_t n, std::int64_t k, unsigned workers) {
    if (n < 0 || ball.radius() < n) throw PreconditionError("detour_row: ball radius below n");
    const BallGraph graph(ball);
    const PairEnumerator pairs(ball, k);
    const auto order = ball.canonical_indices();
    std::vector<std::uint32_t> ranks(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;

    // g ranges over members of B(n) in canonical order, split into contiguous
    // chunks; merging keeps the result independent of the split.
    std::vector<std::uint32_t> members;
    for (std::uint32_t g : order) {
        if (ball.length(g) <= n) members.push_back(g);
    }
    workers = std::max(1u, workers);
    std::vector<Best> partial(workers);
    auto run = [&](unsigned w) {
        InsideBallSearch search(graph);
        Best& best = partial[w];
        const std::size_t lo = members.size() * w / workers;
        const std::size_t hi = members.size() * (w + 1) / workers;
        std::vector<std::uint32_t> targets;
        for (std::size_t m = lo; m < hi; ++m) {
            const std::uint32_t g = members[m];
            const auto from = pairs.pairs_from(g, n, ranks);
            if (from.empty()) continue;
            targets.clear();
            for (const auto& pr : from) targets.push_back(pr.h);
            const auto dist = search.distances(g, targets, n);
            for (std::size_t t = 0; t < from.size(); ++t) {
                if (dist[t] < 0) throw std::logic_error("detour_row: ball is disconnected");
                ++best.pairs;
                best.max_d = std::max(best.max_d, from[t].d);
                best.offer(dist[t], ranks[g], ranks[from[t].h], g, from[t].h);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    run(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    Best total;
    for (const auto& b : partial) total.merge(b);

    DetourRow row;
    row.n = n;
    row.k = k;
    row.N = total.N;
    row.max_pair_distance = total.max_d;
    row.pairs = total.pairs;
    if (total.g != Ball::npos) {
        row.witness_g = ball.element(total.g);
        row.witness_h = ball.element(total.h);
    }
    return row;
}

DetourTable ac_table(std::int64_t n_max, std::int64_t k, const GeneratingSet& gens, const DetourOptions& options) {
    if (n_max < 0) throw PreconditionError("ac_table: n_max must be nonnegative");
    DetourTable table;
    Ball B(gens, BallOptions{options.memory_budget_bytes});
    try {
        B.extend_to(n_max);
    } catch (const BudgetExceeded& e) {
        table.budget_limited_at = e.completed_radius();
    }
    for (std::int64_t n = 0; n <= B.radius(); ++n) {
        table.rows.push_back(detour_row(B, n, k, options.workers));
    }
    return table;
}

}  // namespace bsac
