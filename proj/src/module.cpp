#include "sl2/module.hpp"
#include "sl2/qarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2 {

const char* to_string(Generator g)
{
    switch (g) {
    case Generator::e: return "e";
    case Generator::f: return "f";
    case Generator::h: return "h";
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::K: return "K";
    case Generator::Kinv: return "Kinv";
    }
    return "?";
}

Flavor flavor_of(Generator g)
{
    switch (g) {
    case Generator::e:
    case Generator::f:
    case Generator::h: return Flavor::classical;
    default: return Flavor::quantum;
    }
}

int weight_shift(Generator g)
{
    switch (g) {
    case Generator::e:
    case Generator::E: return 2;
    case Generator::f:
    case Generator::F: return -2;
    default: return 0;
    }
}

Generator raising(Flavor f) { return f == Flavor::classical ? Generator::e : Generator::E; }
Generator lowering(Flavor f) { return f == Flavor::classical ? Generator::f : Generator::F; }

std::vector<Generator> generators(Flavor f)
{
    if (f == Flavor::classical)
        return {Generator::e, Generator::f, Generator::h};
    return {Generator::E, Generator::F, Generator::K, Generator::Kinv};
}

std::string BasisLabel::to_string() const
{
    switch (kind) {
    case Kind::findim: return "w_" + std::to_string(indices.at(0));
    case Kind::verma: return "m_" + std::to_string(indices.at(0));
    case Kind::rasskazova: return "w^" + std::to_string(indices.at(0)) + "_" + std::to_string(indices.at(1));
    case Kind::tensor: return parts.at(0).to_string() + "|" + parts.at(1).to_string();
    }
    return "?";
}

// ---- Vector ----

Scalar Vector::coefficient(std::size_t index, Flavor f) const
{
    auto it = entries_.find(index);
    return it == entries_.end() ? Scalar::zero(f) : it->second;
}

void Vector::add(std::size_t index, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = entries_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

Vector& Vector::operator+=(const Vector& o)
{
    if (&o == this)
        return *this = o + Vector(o);
    for (const auto& [i, c] : o.entries_)
        add(i, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    if (&o == this) {
        entries_.clear();
        return *this;
    }
    for (const auto& [i, c] : o.entries_)
        add(i, -c);
    return *this;
}

Vector operator*(const Scalar& c, const Vector& x)
{
    Vector r;
    if (c.is_zero())
        return r;
    for (const auto& [i, xi] : x.entries_)
        r.add(i, c * xi);
    return r;
}

// ---- SparseMatrix ----

Scalar SparseMatrix::at(std::size_t row, std::size_t col, Flavor f) const
{
    const auto& c = columns_.at(col);
    auto it = c.find(row);
    return it == c.end() ? Scalar::zero(f) : it->second;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value)
{
    if (row >= dim())
        throw std::out_of_range("matrix row out of range");
    auto& c = columns_.at(col);
    if (value.is_zero())
        c.erase(row);
    else
        c[row] = value;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value)
{
    if (value.is_zero())
        return;
    if (row >= dim())
        throw std::out_of_range("matrix row out of range");
    auto& c = columns_.at(col);
    auto [it, inserted] = c.try_emplace(row, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            c.erase(it);
    }
}

Vector SparseMatrix::apply(const Vector& x) const
{
    Vector r;
    for (const auto& [col, xc] : x.entries())
        for (const auto& [row, a] : columns_.at(col))
            r.add(row, a * xc);
    return r;
}

// ---- WeightModule ----

WeightModule::WeightModule(Flavor flavor, std::string name, std::vector<BasisLabel> basis,
                           std::vector<Rational> weights, std::map<Generator, SparseMatrix> action,
                           std::set<std::size_t> boundary)
    : flavor_(flavor), name_(std::move(name)), basis_(std::move(basis)), weights_(std::move(weights)),
      action_(std::move(action)), boundary_(std::move(boundary))
{
    if (weights_.size() != basis_.size())
        throw std::invalid_argument("weight list does not match basis size");
    for (Generator g : generators(flavor_)) {
        auto it = action_.find(g);
        if (it == action_.end())
            throw std::invalid_argument(std::string("missing action for generator ") + to_string(g));
        if (it->second.dim() != basis_.size())
            throw std::invalid_argument(std::string("action matrix size mismatch for ") + to_string(g));
    }
    for (const auto& [g, mat] : action_)
        if (flavor_of(g) != flavor_)
            throw FlavorMismatch(std::string("generator ") + to_string(g) + " does not act on a "
                                 + sl2::to_string(flavor_) + " module");
    for (std::size_t b : boundary_)
        if (b >= basis_.size())
            throw std::out_of_range("boundary index out of range");
}

const SparseMatrix& WeightModule::action(Generator g) const
{
    if (flavor_of(g) != flavor_)
        throw FlavorMismatch(std::string("generator ") + to_string(g) + " does not act on the "
                             + sl2::to_string(flavor_) + " module " + name_);
    return action_.at(g);
}

std::size_t WeightModule::index_of(const BasisLabel& label) const
{
    auto it = std::find(basis_.begin(), basis_.end(), label);
    if (it == basis_.end())
        throw std::out_of_range("label " + label.to_string() + " not in module " + name_);
    return static_cast<std::size_t>(it - basis_.begin());
}

WeightModule WeightModule::perturbed(Generator g, std::size_t row, std::size_t col, const Scalar& delta) const
{
    WeightModule copy = *this;
    auto& mat = copy.action_.at(g);
    (void)action(g);
    mat.add(row, col, delta);
    copy.name_ += " (perturbed)";
    return copy;
}

// ---- constructors ----

namespace {

std::map<Generator, SparseMatrix> empty_action(Flavor f, std::size_t dim)
{
    std::map<Generator, SparseMatrix> a;
    for (Generator g : generators(f))
        a.emplace(g, SparseMatrix(dim));
    return a;
}

}  // namespace

WeightModule finite_dim_classical(long n)
{
    if (n < 0)
        throw DomainError("finite-dimensional module needs n >= 0, got " + std::to_string(n));
    const auto dim = static_cast<std::size_t>(n + 1);
    std::vector<BasisLabel> basis;
    std::vector<Rational> weights;
    auto action = empty_action(Flavor::classical, dim);
    for (long k = 0; k <= n; ++k) {
        basis.push_back(BasisLabel::findim(k));
        weights.emplace_back(n - 2 * k);
        const auto col = static_cast<std::size_t>(k);
        action[Generator::h].set(col, col, Rational(n - 2 * k));
        if (k > 0)
            action[Generator::e].set(col - 1, col, Rational(n - k + 1));
        if (k < n)
            action[Generator::f].set(col + 1, col, Rational(k + 1));
    }
    return WeightModule(Flavor::classical, "F_" + std::to_string(n), std::move(basis), std::move(weights),
                        std::move(action));
}

WeightModule finite_dim_quantum(long n)
{
    if (n < 0)
        throw DomainError("finite-dimensional module needs n >= 0, got " + std::to_string(n));
    const auto dim = static_cast<std::size_t>(n + 1);
    std::vector<BasisLabel> basis;
    std::vector<Rational> weights;
    auto action = empty_action(Flavor::quantum, dim);
    for (long k = 0; k <= n; ++k) {
        basis.push_back(BasisLabel::findim(k));
        weights.emplace_back(n - 2 * k);
        const auto col = static_cast<std::size_t>(k);
        action[Generator::K].set(col, col, LaurentPoly::monomial(n - 2 * k));
        action[Generator::Kinv].set(col, col, LaurentPoly::monomial(2 * k - n));
        if (k > 0)
            action[Generator::E].set(col - 1, col, q_int(n - k + 1));
        if (k < n)
            action[Generator::F].set(col + 1, col, q_int(k + 1));
    }
    return WeightModule(Flavor::quantum, "U_v F_" + std::to_string(n), std::move(basis), std::move(weights),
                        std::move(action));
}

WeightModule verma_classical(const Rational& hw, long depth)
{
    if (depth < 1)
        throw DomainError("Verma truncation depth must be >= 1, got " + std::to_string(depth));
    const auto dim = static_cast<std::size_t>(depth + 1);
    std::vector<BasisLabel> basis;
    std::vector<Rational> weights;
    auto action = empty_action(Flavor::classical, dim);
    for (long k = 0; k <= depth; ++k) {
        basis.push_back(BasisLabel::verma(k));
        Rational wt = hw - Rational(2 * k);
        weights.push_back(wt);
        const auto col = static_cast<std::size_t>(k);
        action[Generator::h].set(col, col, wt);
        if (k > 0)
            action[Generator::e].set(col - 1, col, Rational(k) * (hw - Rational(k) + Rational(1)));
        if (k < depth)
            action[Generator::f].set(col + 1, col, Rational(1));
    }
    return WeightModule(Flavor::classical, "M(" + hw.to_string() + ") depth " + std::to_string(depth),
                        std::move(basis), std::move(weights), std::move(action), {dim - 1});
}

WeightModule rasskazova(const RasskazovaParams& p)
{
    if (p.n < 1)
        throw DomainError("Rasskazova module needs n >= 1");
    if (p.window < 1)
        throw DomainError("Rasskazova window must be >= 1");
    const long J = p.window;

    // Basis order: i ascending, then j descending.
    std::vector<BasisLabel> basis;
    std::vector<Rational> weights;
    std::set<std::size_t> boundary;
    auto index = [&](long i, long j) { return static_cast<std::size_t>((i - 1) * (2 * J + 1) + (J - j)); };
    for (long i = 1; i <= p.n; ++i)
        for (long j = J; j >= -J; --j) {
            if (j == J || j == -J)
                boundary.insert(basis.size());
            basis.push_back(BasisLabel::rasskazova(i, j));
            weights.push_back(Rational(2 * j) + p.beta);
        }

    auto action = empty_action(Flavor::classical, basis.size());
    auto& e = action[Generator::e];
    auto& f = action[Generator::f];
    auto& h = action[Generator::h];
    const Rational& beta = p.beta;
    const Rational& lambda = p.lambda;
    for (long i = 1; i <= p.n; ++i)
        for (long j = -J; j <= J; ++j) {
            const std::size_t col = index(i, j);
            h.set(col, col, Rational(2 * j) + beta);

            if (j < J) {
                if (j >= 0) {
                    e.set(index(i, j + 1), col, Rational(1));
                } else {
                    e.set(index(i, j + 1), col, lambda + Rational(j) * beta + Rational(j * (j + 1)));
                    if (i > 1)
                        e.set(index(i - 1, j + 1), col, Rational(1));
                }
            }
            if (j > -J) {
                if (j > 0) {
                    f.set(index(i, j - 1), col, -(lambda + Rational(j - 1) * beta + Rational(j * (j - 1))));
                    if (i > 1)
                        f.set(index(i - 1, j - 1), col, Rational(-1));
                } else {
                    f.set(index(i, j - 1), col, Rational(-1));
                }
            }
        }

    std::string name = "V(" + p.beta.to_string() + "," + p.lambda.to_string() + "," + std::to_string(p.n)
                       + ") window " + std::to_string(J);
    return WeightModule(Flavor::classical, std::move(name), std::move(basis), std::move(weights),
                        std::move(action), std::move(boundary));
}

Vector apply(const WeightModule& m, Generator g, const Vector& x)
{
    const SparseMatrix& mat = m.action(g);
    for (const auto& [i, c] : x.entries()) {
        if (i >= m.dim())
            throw std::out_of_range("vector index " + std::to_string(i) + " outside module " + m.name());
        if (c.flavor() != m.flavor())
            throw FlavorMismatch("vector scalar flavor does not match module " + m.name());
    }
    return mat.apply(x);
}

}  // namespace sl2
