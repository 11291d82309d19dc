#pragma once

#include "sl2/module.hpp"

#include <string>
#include <vector>

namespace sl2 {

/// Outcome of one relation on one basis vector. defect is lhs - rhs, zero on success.
struct RelationCheck {
    std::string relation;
    std::size_t basis_index;
    bool passed;
    Vector defect;
};

struct RelationReport {
    std::string module;
    Flavor flavor;
    std::vector<BasisLabel> basis;
    std::vector<RelationCheck> checks;
    std::vector<std::size_t> excluded;

    std::size_t failure_count() const;
    bool ok() const { return failure_count() == 0; }
    /// Basis indices with at least one failing relation, ascending.
    std::vector<std::size_t> failing_vectors() const;
};

/// Names of the relations checked for a flavor, in report order.
std::vector<std::string> relation_names(Flavor f);

/**
 * Verifies the defining relations on every basis vector off the truncation boundary.
 *
 * classical: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
 * quantum:   K Kinv = 1, K E Kinv = v^2 E, K F Kinv = v^-2 F, EF - FE = [weight] on each K-eigenvector.
 */
RelationReport check_relations(const WeightModule& m);

/// A nonzero matrix entry joining basis vectors whose weights differ by the wrong amount,
/// or a diagonal generator that disagrees with the declared weights.
struct WeightViolation {
    Generator generator;
    std::size_t row;
    std::size_t col;
};

/// Sparsity-pattern check that e/E raise weight by 2, f/F lower by 2, and h/K act diagonally
/// by the declared weights.
std::vector<WeightViolation> check_weight_structure(const WeightModule& m);

}  // namespace sl2
