#ifndef CHIPFIRE_SEMIORDER_COUNT_HPP
#define CHIPFIRE_SEMIORDER_COUNT_HPP

#include <vector>

#include "chipfire/rational.hpp"

namespace chipfire {

// Labeled semiorder counts f_0..f_max_k from the exponential generating
// function C(1 - e^{-x}), where C is the Catalan number OGF. Exact rational
// series arithmetic throughout.
std::vector<Int> labeled_semiorder_counts_egf(int max_k);

// Same counts by enumerating and filtering strict orders (independent route).
std::vector<Int> labeled_semiorder_counts_enum(int max_k);

std::vector<Int> catalan_numbers(int max_k);

}  // namespace chipfire

#endif
