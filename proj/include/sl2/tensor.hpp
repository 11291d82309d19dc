#pragma once

#include "sl2/module.hpp"

#include <functional>
#include <map>
#include <vector>

namespace sl2 {

/// Tensor product under the classical coproduct x -> x(x)1 + 1(x)x.
/// Basis is the ordered pairs (i, j), first factor major.
WeightModule tensor_classical(const WeightModule& a, const WeightModule& b);

/// Tensor product under Delta(E) = E(x)K + 1(x)E, Delta(F) = F(x)1 + Kinv(x)F, Delta(K) = K(x)K.
WeightModule tensor_quantum(const WeightModule& a, const WeightModule& b);

/// Dispatches on the common flavor of a and b.
WeightModule tensor(const WeightModule& a, const WeightModule& b);

/// Basis indices grouped by weight, highest weight first, each group in basis order.
using WeightSpaces = std::map<Rational, std::vector<std::size_t>, std::greater<>>;
WeightSpaces weight_spaces(const WeightModule& m);

struct HighestWeightVector {
    Rational weight;
    Vector vector;
};

/**
 * Exact basis of the kernel of the raising operator on every weight space, in descending
 * weight order. Classical vectors have first nonzero coordinate 1. Quantum vectors are
 * primitive (integer coefficients with no common polynomial factor), shifted so the first
 * nonzero entry has lowest exponent 0, with that entry's leading coefficient positive.
 *
 * Every returned vector is re-checked against the raising operator; a nonzero image
 * throws std::logic_error.
 */
std::vector<HighestWeightVector> highest_weight_vectors(const WeightModule& m);

/// Kernel vectors of the raising operator restricted to one weight space.
std::vector<Vector> highest_weight_vectors(const WeightModule& m, const Rational& weight);

/// Rescales x by the normalization convention of highest_weight_vectors for its flavor.
Vector normalize_vector(const Vector& x, Flavor f);

}  // namespace sl2
