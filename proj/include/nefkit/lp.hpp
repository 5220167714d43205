#pragma once

#include <optional>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

/// Decides whether `target` is a nonnegative rational combination of
/// `generators`, returning one certificate of coefficients when it is.
/// Exact phase-1 simplex with Bland's rule.
std::optional<RatVec> nonneg_combination(const RatVec& target,
                                         const std::vector<RatVec>& generators);

}  // namespace nefkit
