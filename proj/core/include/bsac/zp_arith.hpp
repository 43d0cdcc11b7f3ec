#pragma once

// Exact arithmetic on Z[1/p]: values m / p^e with m an arbitrary-precision
// integer and e >= 0, kept in normalized form (e == 0 or p does not divide m).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bsac {

/// The base p of B(1,p). |p| >= 2; negative p is allowed.
class BaseP {
public:
    explicit BaseP(std::int64_t p);

    std::int64_t value() const { return p_; }
    std::uint64_t abs() const { return abs_; }

    /// p^k for k >= 0 (signed).
    mpz_class pow(std::uint64_t k) const;
    /// |p|^k for k >= 0.
    mpz_class abs_pow(std::uint64_t k) const;
    /// |p|^k as an exact rational; k may be negative.
    mpq_class abs_pow_q(std::int64_t k) const;

    friend bool operator==(BaseP a, BaseP b) { return a.p_ == b.p_; }

private:
    std::int64_t p_;
    std::uint64_t abs_;
};

class PFraction {
public:
    PFraction() = default;
    /// Integer value n (exp 0). Always normalized.
    explicit PFraction(long n) : num_(n) {}
    explicit PFraction(mpz_class n) : num_(std::move(n)) {}

    const mpz_class& num() const { return num_; }
    std::uint32_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign(const BaseP& p) const;

    friend bool operator==(const PFraction& a, const PFraction& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }

    /// Canonical (exp, num) order; the key order used for deterministic output.
    friend std::strong_ordering canonical_order(const PFraction& a, const PFraction& b);

    std::size_t hash() const;

    // Raw constructor; callers must pass an already-normalized pair.
    static PFraction from_normalized(mpz_class num, std::uint32_t exp);

private:
    mpz_class num_{0};
    std::uint32_t exp_ = 0;
};

PFraction normalize(mpz_class num, std::uint64_t exp, const BaseP& p);

PFraction add(const PFraction& a, const PFraction& b, const BaseP& p);
PFraction subtract(const PFraction& a, const PFraction& b, const BaseP& p);
PFraction negate(const PFraction& a);

/// a * p^k, for any integer k.
PFraction scale_p_pow(const PFraction& a, std::int64_t k, const BaseP& p);

/// Compares |a| with |b| exactly.
std::strong_ordering abs_compare(const PFraction& a, const PFraction& b, const BaseP& p);

/// |p|^exp.
mpz_class denom(const PFraction& a, const BaseP& p);

mpq_class to_rational(const PFraction& a, const BaseP& p);
mpq_class abs_value(const PFraction& a, const BaseP& p);

/// Inverse of to_rational; throws std::invalid_argument unless the
/// denominator is a power of |p|.
PFraction from_rational(const mpq_class& q, const BaseP& p);

/// "num/p^exp", or "num" when exp == 0.
std::string to_string(const PFraction& a, const BaseP& p);

}  // namespace bsac

template <>
struct std::hash<bsac::PFraction> {
    std::size_t operator()(const bsac::PFraction& a) const noexcept { return a.hash(); }
};
