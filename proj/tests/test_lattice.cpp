#include "kfan/lattice.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kfan;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = d(rng);
    return m;
}

// Laplace expansion; exponential but independent of the elimination code.
Integer laplace_det(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, k++) = a(r, c);
        Integer term = a(0, j) * laplace_det(minor);
        total += (j % 2 ? -term : term);
    }
    return total;
}

void expect_valid_smith(const IntMatrix& a, const SmithDecomposition& s)
{
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(abs(laplace_det(s.U)), 1);
    EXPECT_EQ(abs(laplace_det(s.V)), 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                EXPECT_EQ(s.D(i, j), 0);
    auto d = s.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(d[i], 0);
        if (i + 1 < d.size() && d[i] != 0)
            EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
        if (d[i] == 0 && i + 1 < d.size())
            EXPECT_EQ(d[i + 1], 0);
    }
}

} // namespace

TEST(Smith, DiagonalTwoThreeBecomesOneSix)
{
    IntMatrix a{{2, 0}, {0, 3}};
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
    expect_valid_smith(a, s);
}

TEST(Smith, IdentityIsFixed)
{
    auto s = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(s.D, IntMatrix::identity(3));
    EXPECT_EQ(s.U, IntMatrix::identity(3));
    EXPECT_EQ(s.V, IntMatrix::identity(3));
}

TEST(Smith, ZeroOneByOne)
{
    auto s = smith_normal_form(IntMatrix{{0}});
    EXPECT_EQ(s.D, (IntMatrix{{0}}));
    EXPECT_EQ(s.rank(), 0u);
}

TEST(Smith, RandomMatricesSatisfyInvariantsAndMatchOracle)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a = random_matrix(rng, r, c, 6);
        auto s = smith_normal_form(a);
        expect_valid_smith(a, s);
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < r; ++i)
            rows.push_back(a.row(i));
        auto expected = oracle::invariant_factors(rows);
        IntVector got;
        for (const auto& d : s.invariant_factors())
            if (d != 0)
                got.push_back(d);
        EXPECT_EQ(got, expected) << a;
    }
}

TEST(Smith, Deterministic)
{
    std::mt19937_64 rng(3);
    IntMatrix a = random_matrix(rng, 4, 3, 9);
    auto s1 = smith_normal_form(a);
    auto s2 = smith_normal_form(a);
    EXPECT_EQ(s1.U, s2.U);
    EXPECT_EQ(s1.V, s2.V);
}

TEST(Determinant, MatchesLaplace)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, n, n, 5);
        EXPECT_EQ(determinant(a), laplace_det(a));
    }
}

TEST(IntegerSolve, Examples)
{
    EXPECT_EQ(solve_integer_system(IntMatrix{{1, 0}, {0, 1}}, IntVector{3, 5}), (IntVector{3, 5}));
    EXPECT_FALSE(solve_integer_system(IntMatrix{{2}}, IntVector{1}).has_value());
    EXPECT_EQ(solve_integer_system(IntMatrix{{1, 1}, {0, 1}}, IntVector{2, 1}), (IntVector{1, 1}));
}

TEST(IntegerSolve, SolutionsAreExactAndAbsenceIsConfirmed)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
        IntMatrix a = random_matrix(rng, r, c, 4);
        IntVector b;
        std::uniform_int_distribution<long> d(-6, 6);
        for (std::size_t i = 0; i < r; ++i)
            b.emplace_back(d(rng));
        auto x = solve_integer_system(a, b);
        if (x) {
            EXPECT_EQ(a * std::span<const Integer>(*x), b);
            continue;
        }
        // b outside the column lattice of A
        oracle::RowLattice cols(r);
        for (std::size_t j = 0; j < c; ++j)
            cols.insert(a.column(j));
        EXPECT_FALSE(cols.contains(b));
    }
}

TEST(RationalSolve, FullColumnRank)
{
    IntMatrix a{{2, 1}, {1, 3}};
    auto x = solve_rational_system(a, RationalVector{Rational(1), Rational(2)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational(1, 5));
    EXPECT_EQ((*x)[1], Rational(3, 5));
    EXPECT_FALSE(solve_rational_system(IntMatrix{{1}, {1}}, RationalVector{Rational(1), Rational(2)}));
}

TEST(QuotientProjection, Examples)
{
    EXPECT_EQ(quotient_projection(std::vector<IntVector>{{1, 0}}, 2), (IntMatrix{{0, 1}}));
    EXPECT_EQ(quotient_projection(std::vector<IntVector>{}, 2), IntMatrix::identity(2));
}

TEST(QuotientProjection, KernelIsSpanAndMapIsOnto)
{
    const std::vector<std::vector<IntVector>> cases{
        {{1, 1}}, {{1, 2, 3}}, {{1, 0, 0}, {1, 1, 1}}, {{2, 3}}, {{0, 1, -1, 2}, {1, 0, 0, 5}}};
    for (const auto& gens : cases) {
        const std::size_t n = gens[0].size();
        IntMatrix p = quotient_projection(gens, n);
        ASSERT_EQ(p.rows(), n - gens.size());
        for (const auto& g : gens)
            EXPECT_EQ(p * std::span<const Integer>(g), IntVector(p.rows()));
        auto s = smith_normal_form(p);
        for (const auto& d : s.invariant_factors())
            EXPECT_EQ(d, 1);
    }
}

TEST(QuotientProjection, RejectsNonPrimitiveSpan)
{
    EXPECT_THROW(quotient_projection(std::vector<IntVector>{{2, 0}}, 2), std::invalid_argument);
    EXPECT_THROW(quotient_projection(std::vector<IntVector>{{1, 0}, {1, 2}}, 2), std::invalid_argument);
}

TEST(CompleteBasis, InverseAndLeadingColumns)
{
    std::vector<IntVector> gens{{1, 1, 0}, {0, 1, 1}};
    auto bc = complete_basis(gens, 3);
    EXPECT_EQ(bc.basis * bc.inverse, IntMatrix::identity(3));
    EXPECT_EQ(bc.basis.column(0), gens[0]);
    EXPECT_EQ(bc.basis.column(1), gens[1]);
    EXPECT_EQ(abs(determinant(bc.basis)), 1);
}

TEST(IntegerRank, MatchesOracle)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix a = random_matrix(rng, r, c, 2);
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < r; ++i)
            rows.push_back(a.row(i));
        EXPECT_EQ(integer_rank(a), oracle::invariant_factors(rows).size());
    }
    // a dependency that vanishes only mod large primes is still detected
    IntMatrix big(2, 2);
    big(0, 0) = Integer("2147483647");
    big(0, 1) = 1;
    big(1, 0) = 0;
    big(1, 1) = 1;
    EXPECT_EQ(integer_rank(big), 2u);
}

TEST(Vectors, ContentAndPrimitivity)
{
    EXPECT_EQ(content(IntVector{4, -6}), 2);
    EXPECT_EQ(content(IntVector{0, 0}), 0);
    EXPECT_TRUE(is_primitive(IntVector{3, -5}));
    EXPECT_FALSE(is_primitive(IntVector{2, 0}));
    EXPECT_EQ(to_string(IntVector{1, -2}), "(1,-2)");
}
