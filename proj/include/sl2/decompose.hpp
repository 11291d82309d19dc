#pragma once

#include "sl2/module.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace sl2 {

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Direct sum of finite-dimensional irreducibles: highest weight -> multiplicity.
struct Decomposition {
    std::map<long, long, std::greater<>> summands;

    /// Sum of multiplicity * (weight + 1).
    long dimension() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// F_m (x) F_n = F_{m+n} + F_{m+n-2} + ... + F_{|m-n|}.
Decomposition cg_decompose(long m, long n);

/// Greedy peeling of a weight multiplicity table: take the largest remaining weight w,
/// record F_w, remove one copy of each of w, w-2, ..., -w. Throws DecompositionError if a
/// multiplicity would go negative or a residue is left over.
Decomposition decompose_by_character(const std::map<long, long>& multiplicities);

/// Peels the weight multiplicities of m. Throws DecompositionError for non-integral weights.
Decomposition decompose_by_character(const WeightModule& m);

/// Highest weights of the vectors returned by highest_weight_vectors(m), counted.
Decomposition decompose_by_highest_weights(const WeightModule& m);

}  // namespace sl2
