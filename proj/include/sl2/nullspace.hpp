#pragma once

#include "sl2/scalar.hpp"

#include <vector>

namespace sl2 {

using DenseMatrix = std::vector<std::vector<Scalar>>;

/**
 * Kernel basis of an exact matrix by fraction-free Gauss-Jordan elimination.
 *
 * Each elimination step replaces every non-pivot row by
 * (pivot * a_ij - a_i,col * a_pivot,j) / previous_pivot, an exact division in the
 * coefficient ring, so entries stay in the ring and every pivot finishes equal to the
 * last one. Pivots are the first nonzero entry in row order. One kernel vector per
 * free column, with the last pivot at the free position.
 */
std::vector<std::vector<Scalar>> nullspace(DenseMatrix rows, std::size_t cols, Flavor f);

}  // namespace sl2
