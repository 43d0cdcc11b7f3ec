#include "bsac/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "bsac/errors.hpp"

namespace bsac {

WordLength word_length(const GroupElement& g, const GeneratingSet& gens, std::int64_t max_r, BallOptions options) {
    if (max_r < 0) throw PreconditionError("max_r must be nonnegative");
    WordLength out{std::nullopt, max_r};
    // t-exponent homomorphism: every generator moves c by at most c_max.
    const std::int64_t c_abs = g.c < 0 ? -g.c : g.c;
    if ((c_abs + gens.c_max() - 1) / gens.c_max() > max_r) return out;

    Ball b(gens, options);
    for (std::int64_t r = 0;; ++r) {
        if (auto len = b.length_of(g)) {
            out.length = *len;
            return out;
        }
        if (r == max_r) return out;
        b.extend_to(r + 1);
    }
}

// ---------------------------------------------------------------------------

WordMetric::WordMetric(const GeneratingSet& gens, std::int64_t cached_radius, BallOptions options)
    : owned_(ball(cached_radius, gens, options)), cache_(&*owned_), options_(options) {}

WordMetric::WordMetric(const Ball& cache) : cache_(&cache) {}

WordLength WordMetric::length(const GroupElement& g, std::int64_t max_r) const {
    if (max_r < 0) throw PreconditionError("max_r must be nonnegative");
    WordLength out{std::nullopt, max_r};
    const std::int64_t R = cache_->radius();
    if (auto len = cache_->length_of(g)) {
        if (*len <= max_r) out.length = *len;
        return out;
    }
    if (max_r <= R) return out;

    const auto& gens = cache_->generators();
    const std::int64_t c_abs = g.c < 0 ? -g.c : g.c;
    if ((c_abs + gens.c_max() - 1) / gens.c_max() > max_r) return out;

    // Every candidate i + l(x), with x = g w and |w| = i, bounds l(g) from
    // above; the geodesic vertex at distance max(0, l(g) - R) from g attains it.
    const std::int64_t depth = max_r - R;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::unordered_set<GroupElement> seen{g};
    std::vector<GroupElement> frontier{g};
    std::uint64_t bytes = 0;
    for (std::int64_t i = 0; i <= depth; ++i) {
        for (const auto& x : frontier) {
            if (auto len = cache_->length_of(x)) best = std::min(best, i + *len);
        }
        if (best <= i + 1 || i == depth) break;
        std::vector<GroupElement> next;
        for (const auto& x : frontier) {
            for (const auto& s : gens.gens()) {
                GroupElement y = multiply(x, s, gens.p());
                if (seen.contains(y)) continue;
                bytes += 112 + sizeof(mp_limb_t) * mpz_size(y.f.num().get_mpz_t());
                if (bytes > options_.memory_budget_bytes) {
                    throw BudgetExceeded("memory budget exceeded in word-length search at depth " +
                                             std::to_string(i + 1),
                                         R + i);
                }
                seen.insert(y);
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    if (best <= max_r) out.length = best;
    return out;
}

WordLength WordMetric::distance(const GroupElement& g, const GroupElement& h, std::int64_t max_r) const {
    const BaseP& p = cache_->p();
    return length(multiply(inverse(g, p), h, p), max_r);
}

// ---------------------------------------------------------------------------

std::int64_t inside_ball_distance(const GroupElement& g, const GroupElement& h, const Ball& ball) {
    if (!ball.contains(g) || !ball.contains(h)) {
        throw PreconditionError("inside_ball_distance: endpoint outside the ball");
    }
    if (g == h) return 0;
    const auto& gens = ball.generators();
    std::unordered_map<GroupElement, std::int64_t> dist{{g, 0}};
    std::deque<GroupElement> queue{g};
    while (!queue.empty()) {
        GroupElement x = std::move(queue.front());
        queue.pop_front();
        const std::int64_t dx = dist.at(x);
        for (const auto& s : gens.gens()) {
            GroupElement y = multiply(x, s, gens.p());
            if (!ball.contains(y) || dist.contains(y)) continue;
            if (y == h) return dx + 1;
            dist.emplace(y, dx + 1);
            queue.push_back(std::move(y));
        }
    }
    // Unreachable: each member is joined to the identity by a geodesic inside the ball.
    throw std::logic_error("inside_ball_distance: ball is disconnected");
}

// ---------------------------------------------------------------------------

InsideBallSearch::InsideBallSearch(const BallGraph& graph)
    : graph_(&graph),
      stamp_(graph.ball().size(), 0),
      dist_(graph.ball().size(), 0),
      pred_(graph.ball().size(), Ball::npos) {
    queue_.reserve(graph.ball().size());
}

void InsideBallSearch::reset() {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0u);
        epoch_ = 1;
    }
}

std::vector<std::int64_t> InsideBallSearch::distances(std::uint32_t source, const std::vector<std::uint32_t>& targets,
                                                      std::int64_t n) {
    const Ball& ball = graph_->ball();
    reset();
    // Targets get a distinct stamp so hits are detected on discovery.
    const std::uint32_t visit = epoch_;
    reset();
    const std::uint32_t target_mark = epoch_;
    std::size_t remaining = 0;
    for (std::uint32_t t : targets) {
        if (t != source && stamp_[t] != target_mark) {
            stamp_[t] = target_mark;
            ++remaining;
        }
    }
    auto visited = [&](std::uint32_t v) { return stamp_[v] == visit; };

    std::vector<std::int64_t> out(targets.size(), -1);
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = visit;
    dist_[source] = 0;
    for (std::size_t head = 0; head < queue_.size() && remaining > 0; ++head) {
        const std::uint32_t v = queue_[head];
        for (std::size_t s = 0; s < graph_->degree(); ++s) {
            const std::uint32_t w = graph_->neighbor(v, s);
            if (w == Ball::npos || visited(w) || ball.length(w) > n) continue;
            if (stamp_[w] == target_mark) --remaining;
            stamp_[w] = visit;
            dist_[w] = dist_[v] + 1;
            queue_.push_back(w);
        }
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (visited(targets[i])) out[i] = dist_[targets[i]];
    }
    return out;
}

std::vector<std::uint32_t> InsideBallSearch::shortest_path(std::uint32_t source, std::uint32_t target, std::int64_t n) {
    const Ball& ball = graph_->ball();
    reset();
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = epoch_;
    pred_[source] = Ball::npos;
    bool reached = source == target;
    for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
        const std::uint32_t v = queue_[head];
        for (std::size_t s = 0; s < graph_->degree(); ++s) {
            const std::uint32_t w = graph_->neighbor(v, s);
            if (w == Ball::npos || stamp_[w] == epoch_ || ball.length(w) > n) continue;
            stamp_[w] = epoch_;
            pred_[w] = v;
            if (w == target) {
                reached = true;
                break;
            }
            queue_.push_back(w);
        }
    }
    if (!reached) return {};
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = target; v != Ball::npos; v = pred_[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// ---------------------------------------------------------------------------

PairEnumerator::PairEnumerator(const Ball& ball, std::int64_t k) : ball_(&ball), k_(k) {
    if (k < 1) throw PreconditionError("pair distance k must be at least 1");
    auto collect = [&](const Ball& src) {
        for (std::uint32_t i = 1; i < src.size_within(k); ++i) {
            offsets_.push_back(src.element(i));
            offset_lengths_.push_back(src.length(i));
        }
    };
    if (ball.radius() >= k) {
        collect(ball);
    } else {
        collect(bsac::ball(k, ball.generators()));
    }
}

std::vector<PairAtDistance> PairEnumerator::pairs_from(std::uint32_t g, std::int64_t n,
                                                       const std::vector<std::uint32_t>& ranks) const {
    std::vector<PairAtDistance> out;
    if (ball_->length(g) > n) return out;
    const BaseP& p = ball_->p();
    const GroupElement& ge = ball_->element(g);
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        const std::uint32_t h = ball_->index_of(multiply(ge, offsets_[i], p));
        if (h == Ball::npos || ball_->length(h) > n || ranks[h] <= ranks[g]) continue;
        out.push_back({g, h, offset_lengths_[i]});
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ranks[a.h] < ranks[b.h]; });
    return out;
}

std::vector<PairAtDistance> pairs_within(const Ball& ball, std::int64_t k) {
    PairEnumerator pairs(ball, k);
    const auto ranks = ball.canonical_ranks();
    std::vector<PairAtDistance> out;
    for (std::uint32_t g : ball.canonical_indices()) {
        auto from = pairs.pairs_from(g, ball.radius(), ranks);
        out.insert(out.end(), from.begin(), from.end());
    }
    return out;
}

}  // namespace bsac
