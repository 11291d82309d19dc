#include "sl2/decompose.hpp"
#include "sl2/tensor.hpp"

#include <cstdlib>
#include <string>

namespace sl2 {

long Decomposition::dimension() const
{
    long d = 0;
    for (const auto& [w, mult] : summands)
        d += mult * (w + 1);
    return d;
}

Decomposition cg_decompose(long m, long n)
{
    if (m < 0 || n < 0)
        throw DomainError("cg_decompose needs m, n >= 0");
    Decomposition d;
    for (long w = m + n; w >= std::labs(m - n); w -= 2)
        d.summands[w] = 1;
    return d;
}

Decomposition decompose_by_character(const std::map<long, long>& multiplicities)
{
    std::map<long, long, std::greater<>> left;
    for (const auto& [w, mult] : multiplicities) {
        if (mult < 0)
            throw DecompositionError("negative multiplicity at weight " + std::to_string(w));
        if (mult > 0)
            left[w] = mult;
    }
    Decomposition d;
    while (!left.empty()) {
        const long top = left.begin()->first;
        if (top < 0)
            throw DecompositionError("not a finite-dimensional decomposable weight pattern: residue at weight "
                                     + std::to_string(top) + " with no matching highest weight");
        for (long w = top; w >= -top; w -= 2) {
            auto it = left.find(w);
            if (it == left.end())
                throw DecompositionError("not a finite-dimensional decomposable weight pattern: weight "
                                         + std::to_string(w) + " missing below highest weight "
                                         + std::to_string(top));
            if (--it->second == 0)
                left.erase(it);
        }
        ++d.summands[top];
    }
    return d;
}

Decomposition decompose_by_character(const WeightModule& m)
{
    std::map<long, long> mult;
    for (const auto& w : m.weights()) {
        auto iw = w.to_long();
        if (!iw)
            throw DecompositionError("not a finite-dimensional decomposable weight pattern: weight "
                                     + w.to_string() + " is not an integer");
        ++mult[*iw];
    }
    return decompose_by_character(mult);
}

Decomposition decompose_by_highest_weights(const WeightModule& m)
{
    Decomposition d;
    for (const auto& hw : highest_weight_vectors(m)) {
        auto iw = hw.weight.to_long();
        if (!iw)
            throw DecompositionError("highest weight " + hw.weight.to_string() + " is not an integer");
        ++d.summands[*iw];
    }
    return d;
}

}  // namespace sl2
