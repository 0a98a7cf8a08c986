#pragma once

#include <cstdint>
#include <vector>

#include "gsheaf/flag.hpp"

namespace gsheaf::corpus {

/// Flags of the standard block-upper-triangular parabolics of sl(n), one per
/// composition of n, graded by block-scalar traceless diagonal elements
/// (two gap patterns each). Includes the trivial flag.
std::vector<filt::WeightedFlag> parabolic_flags(std::size_t n);

/// Balanced algebra flag of sl(n): a random integral block-scalar grading
/// conjugated by a random element of SL_n(Z).
filt::WeightedFlag random_algebra_flag(std::size_t n, std::uint64_t seed);

}  // namespace gsheaf::corpus
