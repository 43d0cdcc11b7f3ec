#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bsac/bs_group.hpp"
#include "bsac/generating_set.hpp"

namespace bsac {

struct BallOptions {
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

/// B(n): every element of word length <= n with its length, built by
/// breadth-first search with deduplication on the canonical (f, c) form.
///
/// Members are indexed in BFS discovery order; discovery order is a function
/// of the generator list order alone, so indices are reproducible. Each member
/// also records the generator it was first reached by, which yields a
/// geodesic word.
///
/// Move-only: members are stored once, as keys of the index map.
class Ball {
public:
    static constexpr std::uint32_t npos = UINT32_MAX;

    Ball(GeneratingSet gens, BallOptions options = {});

    Ball(Ball&&) = default;
    Ball& operator=(Ball&&) = default;
    Ball(const Ball&) = delete;
    Ball& operator=(const Ball&) = delete;

    /// Grows the ball to radius n. On budget exhaustion the partially built
    /// level is discarded and BudgetExceeded reports the completed radius.
    void extend_to(std::int64_t n);

    std::int64_t radius() const { return radius_; }
    std::size_t size() const { return elements_.size(); }
    /// Number of members of length <= n.
    std::size_t size_within(std::int64_t n) const;

    const GeneratingSet& generators() const { return gens_; }
    const BaseP& p() const { return gens_.p(); }

    std::uint32_t index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g) != npos; }
    std::optional<std::int64_t> length_of(const GroupElement& g) const;

    const GroupElement& element(std::uint32_t i) const { return *elements_[i]; }
    std::int64_t length(std::uint32_t i) const { return lengths_[i]; }

    /// A geodesic word for member i.
    Word geodesic_word(std::uint32_t i) const;

    /// Member indices sorted by canonical element order.
    std::vector<std::uint32_t> canonical_indices() const;
    /// rank[i] = position of member i in canonical order.
    std::vector<std::uint32_t> canonical_ranks() const;

    std::uint64_t approx_bytes() const { return approx_bytes_; }

private:
    std::uint32_t insert(GroupElement g, std::int64_t len, std::uint32_t parent, std::uint32_t gen);
    void truncate(std::size_t count);

    GeneratingSet gens_;
    BallOptions options_;
    std::int64_t radius_ = 0;
    std::unordered_map<GroupElement, std::uint32_t> index_;
    std::vector<const GroupElement*> elements_;
    std::vector<std::uint16_t> lengths_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> via_;
    std::vector<std::size_t> level_start_;  // level_start_[d] = first index at length d
    std::uint64_t approx_bytes_ = 0;
};

/// The ball of radius n.
Ball ball(std::int64_t n, const GeneratingSet& gens, BallOptions options = {});

/// Vertex-indexed Cayley graph restricted to a ball: neighbor(v, s) is the
/// index of element(v) * gen[s], or Ball::npos when that lies outside.
class BallGraph {
public:
    explicit BallGraph(const Ball& ball);

    const Ball& ball() const { return *ball_; }
    std::size_t degree() const { return degree_; }
    std::uint32_t neighbor(std::uint32_t v, std::size_t s) const { return adj_[v * degree_ + s]; }

private:
    const Ball* ball_;
    std::size_t degree_;
    std::vector<std::uint32_t> adj_;
};

}  // namespace bsac
