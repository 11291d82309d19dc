#include "sl2/nullspace.hpp"

#include <stdexcept>
#include <utility>

namespace sl2 {

std::vector<std::vector<Scalar>> nullspace(DenseMatrix m, std::size_t cols, Flavor f)
{
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix passed to nullspace");

    Scalar prev = Scalar::one(f);
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    std::size_t rank = 0;

    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        const Scalar piv = m[rank][col];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank)
                continue;
            const Scalar factor = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = div_exact(piv * m[i][j] - factor * m[rank][j], prev);
        }
        prev = piv;
        pivot_cols.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> x(cols, Scalar::zero(f));
        x[free] = prev;
        for (std::size_t r = 0; r < rank; ++r)
            x[pivot_cols[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace sl2
