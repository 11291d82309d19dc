#include "sl2/decompose.hpp"
#include "sl2/nullspace.hpp"
#include "sl2/qarith.hpp"
#include "sl2/relations.hpp"
#include "sl2/tensor.hpp"

#include <doctest.h>

using namespace sl2;

namespace {

std::size_t pair_index(const WeightModule& t, long i, long j)
{
    return t.index_of(BasisLabel::tensor(BasisLabel::findim(i), BasisLabel::findim(j)));
}

Vector combo(std::initializer_list<std::pair<std::size_t, Scalar>> entries)
{
    Vector x;
    for (const auto& [i, c] : entries)
        x.add(i, c);
    return x;
}

Decomposition D(std::initializer_list<std::pair<long, long>> s)
{
    Decomposition d;
    for (auto [w, m] : s)
        d.summands[w] = m;
    return d;
}

}  // namespace

TEST_CASE("tensor_classical")
{
    auto f3 = finite_dim_classical(3);
    auto t = tensor_classical(finite_dim_classical(0), f3);
    for (Generator g : generators(Flavor::classical))
        CHECK(t.action(g) == f3.action(g));

    auto t11 = tensor_classical(finite_dim_classical(1), finite_dim_classical(1));
    CHECK(apply(t11, Generator::e, Vector::basis(pair_index(t11, 1, 1), Flavor::classical))
          == combo({{pair_index(t11, 0, 1), Scalar(Rational(1))}, {pair_index(t11, 1, 0), Scalar(Rational(1))}}));
    CHECK(tensor_classical(finite_dim_classical(2), f3).dim() == 12);
    CHECK_THROWS_AS(tensor_classical(finite_dim_classical(1), finite_dim_quantum(1)), FlavorMismatch);
    CHECK(check_relations(t11).ok());
}

TEST_CASE("tensor_quantum")
{
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n) {
            auto t = tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n));
            std::size_t top = pair_index(t, 0, 0);
            CHECK(apply(t, Generator::K, Vector::basis(top, Flavor::quantum))
                  == Scalar(LaurentPoly::monomial(m + n)) * Vector::basis(top, Flavor::quantum));
        }
    auto t11 = tensor_quantum(finite_dim_quantum(1), finite_dim_quantum(1));
    CHECK(apply(t11, Generator::E, Vector::basis(pair_index(t11, 1, 1), Flavor::quantum))
          == combo({{pair_index(t11, 0, 1), Scalar(LaurentPoly::monomial(-1))},
                    {pair_index(t11, 1, 0), Scalar(LaurentPoly(1))}}));
    CHECK(check_relations(t11).ok());
    CHECK_THROWS_AS(tensor_quantum(finite_dim_classical(1), finite_dim_classical(1)), FlavorMismatch);
}

TEST_CASE("tensor_quantum is a module for m, n <= 5")
{
    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n) {
            auto t = tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n));
            CHECK(check_relations(t).ok());
            CHECK(check_weight_structure(t).empty());
        }
}

TEST_CASE("weight_spaces")
{
    auto t11 = tensor_classical(finite_dim_classical(1), finite_dim_classical(1));
    auto ws = weight_spaces(t11);
    CHECK(ws.size() == 3);
    CHECK(ws.at(Rational(2)).size() == 1);
    CHECK(ws.at(Rational(0)) == std::vector<std::size_t>{1, 2});
    CHECK(ws.at(Rational(-2)).size() == 1);
    CHECK(ws.begin()->first == Rational(2));

    for (long n = 0; n <= 5; ++n)
        for (const auto& [w, idx] : weight_spaces(finite_dim_classical(n)))
            CHECK(idx.size() == 1);

    // Brute count of pairs (k, k') with (2-2k)+(2-2k') = 0.
    long pairs = 0;
    for (long k = 0; k <= 2; ++k)
        for (long kk = 0; kk <= 2; ++kk)
            pairs += (2 - 2 * k) + (2 - 2 * kk) == 0;
    auto t22 = tensor_classical(finite_dim_classical(2), finite_dim_classical(2));
    CHECK(weight_spaces(t22).at(Rational(0)).size() == static_cast<std::size_t>(pairs));
    CHECK(pairs == 3);
}

TEST_CASE("nullspace by fraction-free elimination")
{
    // x + y + z = 0, 2x - z = 0 over the rationals
    DenseMatrix a = {{Scalar(Rational(1)), Scalar(Rational(1)), Scalar(Rational(1))},
                     {Scalar(Rational(2)), Scalar(Rational(0)), Scalar(Rational(-1))}};
    auto ker = nullspace(a, 3, Flavor::classical);
    REQUIRE(ker.size() == 1);
    for (const auto& row : a) {
        Scalar s = Scalar::zero(Flavor::classical);
        for (std::size_t j = 0; j < 3; ++j)
            s += row[j] * ker[0][j];
        CHECK(s.is_zero());
    }
    // Zero rows leave every column free.
    CHECK(nullspace({}, 2, Flavor::classical).size() == 2);

    // A Laurent matrix whose elimination needs exact division by the previous pivot.
    const LaurentPoly v = LaurentPoly::v();
    DenseMatrix q = {{Scalar(q_int(2)), Scalar(q_int(3)), Scalar(q_int(4)), Scalar(v)},
                     {Scalar(q_int(3)), Scalar(q_int(4)), Scalar(q_int(5)), Scalar(LaurentPoly(1))},
                     {Scalar(q_int(5)), Scalar(q_int(7)), Scalar(q_int(9)), Scalar(v + LaurentPoly(1))}};
    auto kq = nullspace(q, 4, Flavor::quantum);
    CHECK(!kq.empty());
    for (const auto& x : kq)
        for (const auto& row : q) {
            Scalar s = Scalar::zero(Flavor::quantum);
            for (std::size_t j = 0; j < 4; ++j)
                s += row[j] * x[j];
            CHECK(s.is_zero());
        }
}

TEST_CASE("highest_weight_vectors examples")
{
    auto c11 = tensor_classical(finite_dim_classical(1), finite_dim_classical(1));
    auto h0 = highest_weight_vectors(c11, Rational(0));
    REQUIRE(h0.size() == 1);
    CHECK(h0[0] == combo({{pair_index(c11, 0, 1), Scalar(Rational(1))}, {pair_index(c11, 1, 0), Scalar(Rational(-1))}}));

    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 4; ++n)
            for (auto t : {tensor_classical(finite_dim_classical(m), finite_dim_classical(n)),
                           tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n))}) {
                auto top = highest_weight_vectors(t, Rational(m + n));
                REQUIRE(top.size() == 1);
                CHECK(top[0] == Vector::basis(pair_index(t, 0, 0), t.flavor()));
            }

    // Quantum weight 0 of F_1 (x) F_1: E kills w_0|w_1 + c w_1|w_0 iff 1 + v c = 0, so c = -v^-1.
    auto q11 = tensor_quantum(finite_dim_quantum(1), finite_dim_quantum(1));
    auto hq = highest_weight_vectors(q11, Rational(0));
    REQUIRE(hq.size() == 1);
    CHECK(hq[0] == combo({{pair_index(q11, 0, 1), Scalar(LaurentPoly(1))},
                          {pair_index(q11, 1, 0), Scalar(LaurentPoly::monomial(-1, Rational(-1)))}}));
}

TEST_CASE("highest-weight vectors are annihilated eigenvectors")
{
    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n)
            for (auto t : {tensor_classical(finite_dim_classical(m), finite_dim_classical(n)),
                           tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n))}) {
                auto hws = highest_weight_vectors(t);
                CHECK(hws.size() == static_cast<std::size_t>(std::min(m, n) + 1));
                for (std::size_t i = 1; i < hws.size(); ++i)
                    CHECK(hws[i - 1].weight > hws[i].weight);
                for (const auto& hw : hws) {
                    CHECK(apply(t, raising(t.flavor()), hw.vector).is_zero());
                    long w = *hw.weight.to_long();
                    if (t.flavor() == Flavor::classical)
                        CHECK(apply(t, Generator::h, hw.vector) == Scalar(hw.weight) * hw.vector);
                    else
                        CHECK(apply(t, Generator::K, hw.vector) == Scalar(LaurentPoly::monomial(w)) * hw.vector);
                }
            }
}

TEST_CASE("quantum oracle specializes to the classical oracle")
{
    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n) {
            auto tq = tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n));
            auto tc = tensor_classical(finite_dim_classical(m), finite_dim_classical(n));
            for (long p = 0; p <= std::min(m, n); ++p) {
                Rational w(m + n - 2 * p);
                auto q = highest_weight_vectors(tq, w);
                auto c = highest_weight_vectors(tc, w);
                REQUIRE(q.size() == 1);
                REQUIRE(c.size() == 1);
                Vector spec;
                for (const auto& [i, s] : q[0].entries())
                    spec.add(i, Scalar(s.specialize_one()));
                CHECK(normalize_vector(spec, Flavor::classical) == c[0]);
            }
        }
}

TEST_CASE("cg_decompose")
{
    CHECK(cg_decompose(1, 1) == D({{2, 1}, {0, 1}}));
    CHECK(cg_decompose(4, 0) == D({{4, 1}}));
    CHECK(cg_decompose(2, 3) == D({{5, 1}, {3, 1}, {1, 1}}));
    for (long m = 0; m <= 12; ++m)
        for (long n = 0; n <= 12; ++n) {
            CHECK(cg_decompose(m, n).dimension() == (m + 1) * (n + 1));
            CHECK(cg_decompose(m, n) == cg_decompose(n, m));
        }
}

TEST_CASE("decompose_by_character")
{
    CHECK(decompose_by_character(std::map<long, long>{{2, 1}, {0, 2}, {-2, 1}}) == D({{2, 1}, {0, 1}}));
    for (long n = 0; n <= 6; ++n)
        CHECK(decompose_by_character(finite_dim_classical(n)) == D({{n, 1}}));
    CHECK_THROWS_AS(decompose_by_character(verma_classical(Rational(0), 3)), DecompositionError);
    CHECK_THROWS_AS(decompose_by_character(verma_classical(Rational(5, 2), 3)), DecompositionError);
    CHECK_THROWS_AS(decompose_by_character(std::map<long, long>{{2, 1}, {0, 1}}), DecompositionError);
    CHECK_THROWS_AS(decompose_by_character(std::map<long, long>{{1, 1}}), DecompositionError);
    CHECK(decompose_by_character(std::map<long, long>{}).summands.empty());
}

TEST_CASE("three routes to the Clebsch-Gordan decomposition agree")
{
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= 8; ++n) {
            auto expected = cg_decompose(m, n);
            auto tc = tensor_classical(finite_dim_classical(m), finite_dim_classical(n));
            auto tq = tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n));
            CHECK(decompose_by_character(tc) == expected);
            CHECK(decompose_by_character(tq) == expected);
            if (m <= 5 && n <= 5) {
                CHECK(decompose_by_highest_weights(tc) == expected);
                CHECK(decompose_by_highest_weights(tq) == expected);
            }
        }
}
