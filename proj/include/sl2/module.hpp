#pragma once

#include "sl2/scalar.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sl2 {

/// Generators: e, f, h act on classical modules; E, F, K, Kinv on quantum ones.
enum class Generator { e, f, h, E, F, K, Kinv };

const char* to_string(Generator g);
Flavor flavor_of(Generator g);
/// Weight shift of a generator: +2 raising, -2 lowering, 0 diagonal.
int weight_shift(Generator g);
Generator raising(Flavor f);
Generator lowering(Flavor f);
std::vector<Generator> generators(Flavor f);

/// Name of one basis vector. Finite-dimensional and Verma vectors carry an ordinal k,
/// Rasskazova vectors a pair (i, j), tensor vectors the pair of constituent labels.
struct BasisLabel {
    enum class Kind { findim, verma, rasskazova, tensor };

    Kind kind = Kind::findim;
    std::vector<long> indices;
    std::vector<BasisLabel> parts;

    static BasisLabel findim(long k) { return {Kind::findim, {k}, {}}; }
    static BasisLabel verma(long k) { return {Kind::verma, {k}, {}}; }
    static BasisLabel rasskazova(long i, long j) { return {Kind::rasskazova, {i, j}, {}}; }
    static BasisLabel tensor(const BasisLabel& a, const BasisLabel& b) { return {Kind::tensor, {}, {a, b}}; }

    /// "w_k", "m_k", "w^i_j", or "a|b" for tensors.
    std::string to_string() const;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Sparse linear combination of basis vectors of one ambient module, keyed by basis index.
class Vector {
public:
    using Entries = std::map<std::size_t, Scalar>;

    Vector() = default;
    static Vector basis(std::size_t index, Flavor f) { Vector v; v.add(index, Scalar::one(f)); return v; }

    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Scalar coefficient(std::size_t index, Flavor f) const;

    /// Adds c to the coefficient at index, dropping it if it becomes zero.
    void add(std::size_t index, const Scalar& c);

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, const Vector& x);

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    Entries entries_;
};

/// Square sparse matrix stored by column: column c holds the image of basis vector c.
class SparseMatrix {
public:
    using Column = std::map<std::size_t, Scalar>;

    explicit SparseMatrix(std::size_t dim = 0) : columns_(dim) {}

    std::size_t dim() const { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_.at(c); }
    Scalar at(std::size_t row, std::size_t col, Flavor f) const;
    void set(std::size_t row, std::size_t col, const Scalar& value);
    void add(std::size_t row, std::size_t col, const Scalar& value);

    Vector apply(const Vector& x) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::vector<Column> columns_;
};

/**
 * Weight module with an explicit finite basis and sparse generator actions.
 *
 * Weights are the h-eigenvalues (classical) or the exponents of the K-eigenvalues
 * v^weight (quantum, integral). Basis vectors on the truncation boundary of a
 * truncated infinite module have some generator image clipped.
 */
class WeightModule {
public:
    WeightModule(Flavor flavor, std::string name, std::vector<BasisLabel> basis, std::vector<Rational> weights,
                 std::map<Generator, SparseMatrix> action, std::set<std::size_t> boundary = {});

    Flavor flavor() const { return flavor_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    const BasisLabel& label(std::size_t i) const { return basis_.at(i); }
    const Rational& weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<Rational>& weights() const { return weights_; }
    const std::set<std::size_t>& boundary() const { return boundary_; }
    bool on_boundary(std::size_t i) const { return boundary_.count(i) != 0; }

    /// Throws FlavorMismatch when g does not belong to this module's flavor.
    const SparseMatrix& action(Generator g) const;

    /// Position of a label in the basis; throws std::out_of_range when absent.
    std::size_t index_of(const BasisLabel& label) const;

    /// Copy with delta added to one action entry (fault injection for the relation checker).
    WeightModule perturbed(Generator g, std::size_t row, std::size_t col, const Scalar& delta) const;

private:
    Flavor flavor_;
    std::string name_;
    std::vector<BasisLabel> basis_;
    std::vector<Rational> weights_;
    std::map<Generator, SparseMatrix> action_;
    std::set<std::size_t> boundary_;
};

/// Parameters of the Rasskazova module V(beta, lambda, n), truncated to j in [-window, window].
struct RasskazovaParams {
    Rational beta;
    Rational lambda;
    long n = 1;
    long window = 1;
};

/// F_n with basis w_0..w_n, weight(w_k) = n - 2k, e w_k = (n-k+1) w_{k-1}, f w_k = (k+1) w_{k+1}.
WeightModule finite_dim_classical(long n);

/// Quantum F_n: K w_k = v^(n-2k) w_k, E w_k = [n-k+1] w_{k-1}, F w_k = [k+1] w_{k+1}.
WeightModule finite_dim_quantum(long n);

/// Verma module of highest weight hw truncated after w_depth; f w_depth is clipped.
WeightModule verma_classical(const Rational& hw, long depth);

/// Rasskazova's V(beta, lambda, n) on the window |j| <= J, with w^0_j = 0.
WeightModule rasskazova(const RasskazovaParams& p);

/// Sparse matrix-vector product. Throws FlavorMismatch when g is not a generator of m,
/// std::out_of_range when x has an index outside m.
Vector apply(const WeightModule& m, Generator g, const Vector& x);

}  // namespace sl2
