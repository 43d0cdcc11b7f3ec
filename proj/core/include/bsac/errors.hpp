#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsac {

/// A word referenced a generator index outside the generating set.
class MalformedWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Violated operation precondition (element outside a ball, k <= j, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A generating set failed validation.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The configured memory budget would be exceeded. Carries the largest
/// radius whose ball was fully built.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::int64_t completed_radius)
        : std::runtime_error(what), completed_radius_(completed_radius) {}

    std::int64_t completed_radius() const { return completed_radius_; }

private:
    std::int64_t completed_radius_;
};

/// An audited inequality failed. Since the audited statements are theorems,
/// this signals a defect in the implementation.
class AuditViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bsac
