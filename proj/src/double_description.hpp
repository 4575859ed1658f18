#pragma once

#include <cstddef>
#include <vector>

#include "resurgia/rational.hpp"

namespace resurgia::detail {

using IntVector = std::vector<Integer>;

/// Extreme rays of the pointed cone {y in R^dim : y >= 0, <row, y> >= 0 for all rows},
/// by incremental double description starting from the orthant. Rays are
/// primitive integer vectors. Throws BudgetExceeded past ray_limit.
std::vector<IntVector> extreme_rays_over_orthant(std::size_t dim, const std::vector<IntVector>& rows,
                                                 std::size_t ray_limit);

}  // namespace resurgia::detail
