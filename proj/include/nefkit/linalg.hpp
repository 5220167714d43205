#pragma once

#include <cstddef>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

/// Reduced row echelon form over the rationals; zero rows are dropped.
std::vector<RatVec> rref(std::vector<RatVec> rows);

std::size_t rank(const std::vector<RatVec>& rows);

/// Basis of { x in Q^dim : <row, x> = 0 for every row }.
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t dim);

}  // namespace nefkit
