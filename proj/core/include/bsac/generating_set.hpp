#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "bsac/bs_group.hpp"
#include "bsac/zp_arith.hpp"

namespace bsac {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB

struct ValidationOptions {
    /// (1,0) and (0,1) must be reachable within this many generator steps.
    std::int64_t generation_radius = 20;
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

/// An inverse-closed finite generating set of B(1,p) together with the
/// constants the convexity analysis is stated in terms of.
class GeneratingSet {
public:
    const BaseP& p() const { return p_; }
    std::span<const GroupElement> gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const GroupElement& operator[](std::size_t i) const { return gens_[i]; }

    /// Index of the inverse of generator i.
    std::uint32_t inverse_index(std::size_t i) const { return inverse_[i]; }
    /// How many leading generators came from the caller (the rest were added
    /// by inverse closure).
    std::size_t supplied_count() const { return supplied_; }

    /// max c_i (> 0)
    std::int64_t c_max() const { return c_max_; }
    /// max |f_i|
    const mpq_class& f_star_abs() const { return f_star_abs_; }
    /// First generator (in list order) attaining c_max; the (f_*, c) generator.
    std::uint32_t f_star_gen() const { return f_star_gen_; }
    /// max denom(f_i)
    const mpz_class& f_dstar() const { return f_dstar_; }
    /// word length of (1,0)
    std::int64_t ell() const { return ell_; }
    /// max word length of (0,i) over integers |i| <= c_max/2
    std::int64_t eps() const { return eps_; }

private:
    friend GeneratingSet validate_generating_set(const BaseP&, std::span<const GroupElement>, const ValidationOptions&);

    explicit GeneratingSet(BaseP p) : p_(p) {}

    BaseP p_;
    std::vector<GroupElement> gens_;
    std::vector<std::uint32_t> inverse_;
    std::size_t supplied_ = 0;
    std::int64_t c_max_ = 0;
    mpq_class f_star_abs_{0};
    std::uint32_t f_star_gen_ = 0;
    mpz_class f_dstar_{1};
    std::int64_t ell_ = 0;
    std::int64_t eps_ = 0;
};

/// Closes `raw` under inverses (dropping identities and duplicates, keeping
/// first-appearance order with missing inverses appended), derives the
/// constants, and confirms that the set generates B(1,p).
///
/// Throws GenerationError with "cannot generate" when no generator has a
/// nonzero t-exponent, or "generation unconfirmed at radius R" when (1,0) or
/// (0,1) is not reachable within options.generation_radius steps.
GeneratingSet validate_generating_set(const BaseP& p, std::span<const GroupElement> raw,
                                      const ValidationOptions& options = {});

/// {a, t} = {(1,0), (0,1)} and their inverses.
GeneratingSet standard_generators(const BaseP& p);

}  // namespace bsac
