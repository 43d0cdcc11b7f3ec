#include "bsac/zp_arith.hpp"

#include <stdexcept>
#include <string_view>

namespace bsac {

BaseP::BaseP(std::int64_t p) : p_(p), abs_(p < 0 ? static_cast<std::uint64_t>(-p) : static_cast<std::uint64_t>(p)) {
    if (abs_ < 2) {
        throw std::invalid_argument("base p must satisfy |p| >= 2, got " + std::to_string(p));
    }
}

mpz_class BaseP::pow(std::uint64_t k) const {
    mpz_class r;
    mpz_class base(static_cast<long>(p_));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

mpz_class BaseP::abs_pow(std::uint64_t k) const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), abs_, k);
    return r;
}

mpq_class BaseP::abs_pow_q(std::int64_t k) const {
    if (k >= 0) return mpq_class(abs_pow(static_cast<std::uint64_t>(k)));
    mpq_class r(mpz_class(1), abs_pow(static_cast<std::uint64_t>(-k)));
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------

PFraction PFraction::from_normalized(mpz_class num, std::uint32_t exp) {
    PFraction r;
    r.num_ = std::move(num);
    r.exp_ = exp;
    return r;
}

int PFraction::sign(const BaseP& p) const {
    int s = sgn(num_);
    // value = num / p^exp; an odd power of a negative base flips the sign
    if (p.value() < 0 && (exp_ & 1u)) s = -s;
    return s;
}

std::strong_ordering canonical_order(const PFraction& a, const PFraction& b) {
    if (a.exp_ != b.exp_) return a.exp_ <=> b.exp_;
    int c = cmp(a.num_, b.num_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t PFraction::hash() const {
    const mpz_srcptr z = num_.get_mpz_t();
    std::size_t h = std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(z->_mp_d), sizeof(mp_limb_t) * mpz_size(z)));
    h ^= static_cast<std::size_t>(z->_mp_size < 0) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(exp_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------------------

PFraction normalize(mpz_class num, std::uint64_t exp, const BaseP& p) {
    if (num == 0) return PFraction{};
    const mpz_class base(static_cast<long>(p.value()));
    mpz_class q, r;
    while (exp > 0) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), base.get_mpz_t());
        if (r != 0) break;
        num.swap(q);
        --exp;
    }
    if (exp > UINT32_MAX) throw std::overflow_error("denominator exponent out of range");
    return PFraction::from_normalized(std::move(num), static_cast<std::uint32_t>(exp));
}

PFraction add(const PFraction& a, const PFraction& b, const BaseP& p) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp() == b.exp()) {
        // Equal exponents may cancel p-factors, so the sum needs renormalizing.
        return normalize(a.num() + b.num(), a.exp(), p);
    }
    // Distinct exponents: the term with the larger exponent keeps a numerator
    // coprime to p after scaling the other, so the result is already normalized.
    const PFraction& hi = a.exp() > b.exp() ? a : b;
    const PFraction& lo = a.exp() > b.exp() ? b : a;
    mpz_class num = hi.num() + lo.num() * p.pow(hi.exp() - lo.exp());
    return PFraction::from_normalized(std::move(num), hi.exp());
}

PFraction negate(const PFraction& a) { return PFraction::from_normalized(-a.num(), a.exp()); }

PFraction subtract(const PFraction& a, const PFraction& b, const BaseP& p) { return add(a, negate(b), p); }

PFraction scale_p_pow(const PFraction& a, std::int64_t k, const BaseP& p) {
    if (a.is_zero() || k == 0) return a;
    if (k < 0) {
        const std::uint64_t e = a.exp() + static_cast<std::uint64_t>(-k);
        if (e > UINT32_MAX) throw std::overflow_error("denominator exponent out of range");
        // an integer may still carry factors of p
        if (a.exp() == 0) return normalize(a.num(), e, p);
        return PFraction::from_normalized(a.num(), static_cast<std::uint32_t>(e));
    }
    const auto up = static_cast<std::uint64_t>(k);
    if (up <= a.exp()) return PFraction::from_normalized(a.num(), static_cast<std::uint32_t>(a.exp() - up));
    return PFraction::from_normalized(a.num() * p.pow(up - a.exp()), 0);
}

std::strong_ordering abs_compare(const PFraction& a, const PFraction& b, const BaseP& p) {
    mpz_class lhs = abs(a.num()) * p.abs_pow(b.exp());
    mpz_class rhs = abs(b.num()) * p.abs_pow(a.exp());
    int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

mpz_class denom(const PFraction& a, const BaseP& p) { return p.abs_pow(a.exp()); }

mpq_class to_rational(const PFraction& a, const BaseP& p) {
    mpq_class q(a.num(), p.pow(a.exp()));
    q.canonicalize();
    return q;
}

mpq_class abs_value(const PFraction& a, const BaseP& p) {
    mpq_class q(abs(a.num()), p.abs_pow(a.exp()));
    q.canonicalize();
    return q;
}

PFraction from_rational(const mpq_class& q, const BaseP& p) {
    // Find e with den | |p|^e, then num * (p^e / den) / p^e.
    mpz_class den = q.get_den();
    mpz_class pe = 1;
    std::uint64_t e = 0;
    const mpz_class base(static_cast<unsigned long>(p.abs()));
    // the minimal e, when it exists, is at most log2(den)
    const std::uint64_t max_e = mpz_sizeinbase(den.get_mpz_t(), 2);
    while (pe % den != 0) {
        if (e >= max_e) {
            throw std::invalid_argument("rational " + q.get_str() + " is not in Z[1/p]");
        }
        pe *= base;
        ++e;
    }
    mpz_class num = q.get_num() * (pe / den);
    // pe = |p|^e; the stored denominator is p^e
    if (p.value() < 0 && (e & 1u)) num = -num;
    return normalize(std::move(num), e, p);
}

std::string to_string(const PFraction& a, const BaseP& p) {
    std::string s = a.num().get_str();
    if (a.exp() == 0) return s;
    s += '/';
    if (p.value() < 0) {
        s += '(' + std::to_string(p.value()) + ')';
    } else {
        s += std::to_string(p.value());
    }
    s += '^' + std::to_string(a.exp());
    return s;
}

}  // namespace bsac
