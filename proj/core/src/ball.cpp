#include "bsac/ball.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsac/errors.hpp"

namespace bsac {

namespace {

constexpr std::int64_t kMaxRadius = UINT16_MAX;

// Rough resident cost of one member: hash node and bucket, the per-index
// vectors, and the numerator limbs.
std::uint64_t member_bytes(const GroupElement& g) {
    return 112 + sizeof(mp_limb_t) * mpz_size(g.f.num().get_mpz_t());
}

}  // namespace

Ball::Ball(GeneratingSet gens, BallOptions options) : gens_(std::move(gens)), options_(options) {
    level_start_.push_back(0);
    insert(identity(), 0, npos, npos);
}

std::uint32_t Ball::insert(GroupElement g, std::int64_t len, std::uint32_t parent, std::uint32_t gen) {
    const auto idx = static_cast<std::uint32_t>(elements_.size());
    approx_bytes_ += member_bytes(g);
    auto [it, inserted] = index_.emplace(std::move(g), idx);
    elements_.push_back(&it->first);
    lengths_.push_back(static_cast<std::uint16_t>(len));
    parent_.push_back(parent);
    via_.push_back(gen);
    return idx;
}

void Ball::truncate(std::size_t count) {
    for (std::size_t i = count; i < elements_.size(); ++i) {
        approx_bytes_ -= member_bytes(*elements_[i]);
        index_.erase(*elements_[i]);
    }
    elements_.resize(count);
    lengths_.resize(count);
    parent_.resize(count);
    via_.resize(count);
}

void Ball::extend_to(std::int64_t n) {
    if (n < 0) throw PreconditionError("ball radius must be nonnegative");
    if (n > kMaxRadius) throw PreconditionError("ball radius exceeds " + std::to_string(kMaxRadius));
    const BaseP& p = gens_.p();
    while (radius_ < n) {
        const std::size_t begin = level_start_[radius_];
        const std::size_t end = elements_.size();
        const std::int64_t d = radius_ + 1;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::uint32_t s = 0; s < gens_.size(); ++s) {
                GroupElement x = multiply(*elements_[i], gens_[s], p);
                if (index_.find(x) != index_.end()) continue;
                if (approx_bytes_ + member_bytes(x) > options_.memory_budget_bytes) {
                    truncate(end);
                    throw BudgetExceeded("memory budget of " + std::to_string(options_.memory_budget_bytes) +
                                             " bytes exceeded while building radius " + std::to_string(d),
                                         radius_);
                }
                insert(std::move(x), d, static_cast<std::uint32_t>(i), s);
            }
        }
        level_start_.push_back(end);
        radius_ = d;
    }
}

std::size_t Ball::size_within(std::int64_t n) const {
    if (n < 0) return 0;
    if (n >= radius_) return elements_.size();
    return level_start_[static_cast<std::size_t>(n) + 1];
}

std::uint32_t Ball::index_of(const GroupElement& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? npos : it->second;
}

std::optional<std::int64_t> Ball::length_of(const GroupElement& g) const {
    std::uint32_t i = index_of(g);
    if (i == npos) return std::nullopt;
    return lengths_[i];
}

Word Ball::geodesic_word(std::uint32_t i) const {
    Word w;
    while (parent_[i] != npos) {
        w.push_back(via_[i]);
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<std::uint32_t> Ball::canonical_indices() const {
    std::vector<std::uint32_t> idx(elements_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [this](std::uint32_t a, std::uint32_t b) {
        return canonical_order(*elements_[a], *elements_[b]) < 0;
    });
    return idx;
}

std::vector<std::uint32_t> Ball::canonical_ranks() const {
    auto order = canonical_indices();
    std::vector<std::uint32_t> rank(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    return rank;
}

Ball ball(std::int64_t n, const GeneratingSet& gens, BallOptions options) {
    Ball b(gens, options);
    b.extend_to(n);
    return b;
}

// ---------------------------------------------------------------------------

BallGraph::BallGraph(const Ball& ball) : ball_(&ball), degree_(ball.generators().size()) {
    const auto& gens = ball.generators();
    adj_.resize(ball.size() * degree_);
    for (std::uint32_t v = 0; v < ball.size(); ++v) {
        for (std::size_t s = 0; s < degree_; ++s) {
            adj_[v * degree_ + s] = ball.index_of(multiply(ball.element(v), gens[s], gens.p()));
        }
    }
}

}  // namespace bsac
