#pragma once

// gtest printers; the base is not known here, so fractions print as num/p^exp.

#include <ostream>

#include "bsac/bs_group.hpp"

namespace bsac {

inline void PrintTo(const PFraction& f, std::ostream* os) { *os << f.num().get_str() << "/p^" << f.exp(); }

inline void PrintTo(const GroupElement& g, std::ostream* os) {
    *os << '(';
    PrintTo(g.f, os);
    *os << ", " << g.c << ')';
}

}  // namespace bsac
