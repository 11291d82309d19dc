#pragma once

#include "sl2/module.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2 {

/// Raised when an interpretation places a term outside F_m or F_n.
class PhiIndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/**
 * Reading of the basis symbols in the explicit highest-weight formula: maps (m, n, p, k)
 * to the ordinal positions of the two tensor factors of the k-th term. Positions are not
 * range-checked here.
 */
struct PhiInterpretation {
    std::string id;
    std::string description;
    std::function<std::pair<long, long>(long m, long n, long p, long k)> positions;
};

/// First factor at position k, second at n - (n-p+k) = p-k (subscript counted from the bottom).
PhiInterpretation default_phi_interpretation();
/// First factor fixed by weight matching, second at ordinal position n-p+k.
PhiInterpretation literal_phi_interpretation();
std::vector<PhiInterpretation> phi_interpretations();
/// Throws std::invalid_argument for an unknown id.
PhiInterpretation phi_interpretation(const std::string& id);

/// One term of the formula: sign * v^exponent * numerator / denominator on first (x) second.
struct PhiTerm {
    long k;
    long first;
    long second;
    int sign;
    long exponent;
    LaurentPoly numerator;    // [n-p+k]! / [n-p]!
    LaurentPoly denominator;  // [m]! / [m-k]!
};

struct PhiResult {
    std::string interpretation;
    long m;
    long n;
    long p;
    std::vector<PhiTerm> terms;
    /// Denominator-clearing factor [m]!/[m-p]!; vector = scale * (formula value).
    LaurentPoly scale;
    /// In the basis of tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n)).
    Vector vector;
};

/// Evaluates the explicit formula for the highest-weight vector of weight m+n-2p in
/// F_m (x) F_n, with the sign (-1)^(n-p) constant in k. Throws DomainError unless
/// 0 <= p <= min(m, n) and PhiIndexError when a term falls outside the module.
PhiResult phi_vector(long m, long n, long p, const PhiInterpretation& interp = default_phi_interpretation());

struct ComparisonWitness {
    std::size_t index;
    BasisLabel label;
    Scalar phi;
    Scalar oracle;
};

struct ComparisonReport {
    bool proportional = false;
    /// phi vector = scalar * oracle vector, when proportional.
    std::optional<Scalar> scalar;
    std::optional<ComparisonWitness> witness;
    std::string interpretation;
};

/// Decides whether phi is a multiple of oracle (oracle nonzero and primitive).
ComparisonReport compare_vectors(const Vector& phi, const Vector& oracle, const WeightModule& ambient);

struct PhiAdjudication {
    PhiResult phi;
    Vector oracle;
    ComparisonReport report;
};

/// Compares phi_vector(m, n, p) against the kernel vector of E of weight m+n-2p in the
/// quantum tensor module.
PhiAdjudication phi_vs_oracle(long m, long n, long p, const PhiInterpretation& interp = default_phi_interpretation());

}  // namespace sl2
