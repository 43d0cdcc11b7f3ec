#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bsac/ball.hpp"
#include "bsac/bs_group.hpp"
#include "bsac/generating_set.hpp"

namespace bsac {

/// Outcome of a bounded word-length search. `length` is empty when the
/// element is not within `max_r` of the identity.
struct WordLength {
    std::optional<std::int64_t> length;
    std::int64_t max_r = 0;

    bool found() const { return length.has_value(); }
};

/// l_C(g) by plain breadth-first search from the identity, stopping at the
/// level where g appears or at max_r.
WordLength word_length(const GroupElement& g, const GeneratingSet& gens, std::int64_t max_r,
                       BallOptions options = {});

/// Word lengths answered by meeting in the middle: a cached ball B(R) around
/// the identity plus a breadth-first search outward from the query element.
/// Exact for every max_r; searches cost about |B(max_r - R)|.
class WordMetric {
public:
    WordMetric(const GeneratingSet& gens, std::int64_t cached_radius, BallOptions options = {});
    /// Borrows an existing ball as the cache.
    explicit WordMetric(const Ball& cache);

    const Ball& cache() const { return *cache_; }

    WordLength length(const GroupElement& g, std::int64_t max_r) const;
    /// d_C(g, h) = l_C(g^-1 h)
    WordLength distance(const GroupElement& g, const GroupElement& h, std::int64_t max_r) const;

private:
    std::optional<Ball> owned_;
    const Ball* cache_;
    BallOptions options_;
};

/// Length of the shortest path from g to h through members of `ball` only.
/// Throws PreconditionError if either endpoint lies outside the ball.
std::int64_t inside_ball_distance(const GroupElement& g, const GroupElement& h, const Ball& ball);

/// Repeated breadth-first searches over a BallGraph restricted to members of
/// length <= n. Reuses its buffers between searches; one instance per thread.
class InsideBallSearch {
public:
    explicit InsideBallSearch(const BallGraph& graph);

    /// Distances from `source` to each of `targets` inside B(n), in the order
    /// given. Stops once all targets are reached.
    std::vector<std::int64_t> distances(std::uint32_t source, const std::vector<std::uint32_t>& targets,
                                        std::int64_t n);

    /// A shortest inside path from source to target (both endpoints
    /// included), as member indices. Ties resolve to the first discovered.
    std::vector<std::uint32_t> shortest_path(std::uint32_t source, std::uint32_t target, std::int64_t n);

private:
    void reset();

    const BallGraph* graph_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> pred_;
    std::vector<std::uint32_t> queue_;
    std::uint32_t epoch_ = 0;
};

/// One unordered pair of ball members at global distance d.
struct PairAtDistance {
    std::uint32_t g;  // member index, canonically smaller
    std::uint32_t h;
    std::int64_t d;
};

/// Enumerates every unordered pair {g, h} of members of length <= n with
/// d_C(g, h) <= k, each once, ordered canonically by (g, h). Distances are
/// exact: d = l_C(g^-1 h), read from a ball of radius k.
///
/// `ranks` must be ball.canonical_ranks(). Pairs are produced per smaller
/// member g, so callers can split work across threads by g.
class PairEnumerator {
public:
    PairEnumerator(const Ball& ball, std::int64_t k);

    std::int64_t k() const { return k_; }

    /// Pairs whose canonically smaller member is `g`, sorted by h.
    std::vector<PairAtDistance> pairs_from(std::uint32_t g, std::int64_t n,
                                           const std::vector<std::uint32_t>& ranks) const;

private:
    const Ball* ball_;
    std::int64_t k_;
    std::vector<GroupElement> offsets_;
    std::vector<std::int64_t> offset_lengths_;
};

/// All pairs of `ball` within distance k, in canonical order.
std::vector<PairAtDistance> pairs_within(const Ball& ball, std::int64_t k);

}  // namespace bsac
