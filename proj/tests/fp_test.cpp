#include <modp/errors.hpp>
#include <modp/fp.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace modp;

namespace {

// Cofactor-expansion determinant, independent of the elimination code.
std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>> & a, std::int64_t p)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return ((a[0][0] % p) + p) % p;
    std::int64_t total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    row.push_back(a[i][j]);
            minor.push_back(row);
        }
        std::int64_t term = (a[0][col] % p) * cofactor_det(minor, p) % p;
        total = (col % 2 == 0) ? total + term : total - term;
        total = ((total % p) + p) % p;
    }
    return total;
}

} // namespace

TEST(Prime, RejectsComposites)
{
    EXPECT_THROW(Prime(1), DomainError);
    EXPECT_THROW(Prime(9), DomainError);
    EXPECT_NO_THROW(Prime(7));
    EXPECT_EQ(next_prime_after(7), 11u);
    EXPECT_EQ(next_prime_after(1), 2u);
}

TEST(Scalar, InverseExamples)
{
    EXPECT_EQ(scalar_inverse(FpScalar(2, Prime(3))).residue(), 2u);
    EXPECT_EQ(scalar_inverse(FpScalar(1, Prime(5))).residue(), 1u);
    EXPECT_EQ(scalar_inverse(FpScalar(3, Prime(7))).residue(), 5u);
    EXPECT_THROW(scalar_inverse(FpScalar(0, Prime(7))), DomainError);
}

TEST(Scalar, InverseMatchesExhaustiveSearch)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (std::int64_t a = 1; a < p; ++a) {
            std::int64_t expected = 0;
            for (std::int64_t b = 1; b < p; ++b)
                if (a * b % p == 1)
                    expected = b;
            EXPECT_EQ(scalar_inverse(FpScalar(a, Prime(p))).residue(), static_cast<std::uint32_t>(expected));
        }
    }
}

TEST(Scalar, ArithmeticReducesAndChecksModulus)
{
    FpScalar a(-1, Prime(5));
    EXPECT_EQ(a.residue(), 4u);
    EXPECT_EQ((a + FpScalar(3, Prime(5))).residue(), 2u);
    EXPECT_EQ((a * a).residue(), 1u);
    EXPECT_EQ((-a).residue(), 1u);
    EXPECT_THROW(a + FpScalar(1, Prime(3)), ShapeError);
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(FpMatrix::identity(Prime(2), 3)), 3u);
    std::vector<FpVector> cols{FpVector(Prime(2), {1, 0}), FpVector(Prime(2), {0, 1}), FpVector(Prime(2), {1, 1})};
    EXPECT_EQ(rank(FpMatrix::from_columns(Prime(2), 2, cols)), 2u);
    auto vandermonde = FpMatrix::from_rows(Prime(5), {{1, 1, 1}, {0, 1, 2}, {0, 1, 4}});
    EXPECT_EQ(rank(vandermonde), 3u);
    EXPECT_EQ(cofactor_det({{1, 1, 1}, {0, 1, 2}, {0, 1, 4}}, 5), 2);
}

TEST(Rank, EmptyColumnsAndZero)
{
    std::vector<FpVector> none;
    auto m = FpMatrix::from_columns(Prime(3), 4, none);
    EXPECT_EQ(m.rows(), 4u);
    EXPECT_EQ(m.cols(), 0u);
    EXPECT_EQ(rank(m), 0u);
    EXPECT_EQ(rank(FpMatrix(Prime(3), 2, 2)), 0u);
}

TEST(Determinant, Examples)
{
    EXPECT_EQ(determinant(FpMatrix::identity(Prime(3), 2)).residue(), 1u);
    EXPECT_FALSE(determinant(FpMatrix::from_rows(Prime(5), {{1, 1, 1}, {1, 2, 3}, {1, 4, 9}})).is_zero());
    EXPECT_TRUE(determinant(FpMatrix::from_rows(Prime(2), {{1, 1}, {1, 1}})).is_zero());
    EXPECT_EQ(determinant(FpMatrix(Prime(3), 0, 0)).residue(), 1u);
    EXPECT_THROW(determinant(FpMatrix(Prime(3), 2, 3)), ShapeError);
}

TEST(Determinant, MatchesCofactorExpansion)
{
    const std::uint64_t seed = 7001;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[rng() % 4];
        std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (auto & row : rows)
            for (auto & x : row)
                x = static_cast<std::int64_t>(rng() % p);
        auto m = FpMatrix::from_rows(Prime(p), rows);
        auto det = cofactor_det(rows, p);
        ASSERT_EQ(determinant(m).residue(), static_cast<std::uint32_t>(det)) << "seed " << seed << " trial " << trial;
        ASSERT_EQ(rank(m) == n, det != 0) << "seed " << seed << " trial " << trial;
    }
}

TEST(Vector, SupportAndLeadingIndex)
{
    FpVector v(Prime(3), {0, 0, 1, 1});
    EXPECT_EQ(support(v), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(v.leading_index(), 2u);
    FpVector zero(Prime(3), 4);
    EXPECT_TRUE(support(zero).empty());
    EXPECT_EQ(zero.leading_index(), 4u);
    EXPECT_EQ(support(FpVector(Prime(2), {1, 1, 1, 1})), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Vector, ReductionAndOrdering)
{
    FpVector v(Prime(5), {-1, 7, 0});
    EXPECT_EQ(v[0], 4u);
    EXPECT_EQ(v[1], 2u);
    EXPECT_LT(FpVector(Prime(3), {0, 2}), FpVector(Prime(3), {1, 0}));
    EXPECT_EQ(FpVector::unit(Prime(3), 3, 1), FpVector(Prime(3), {0, 1, 0}));
    EXPECT_THROW(FpVector(Prime(3), {1}) + FpVector(Prime(3), {1, 0}), ShapeError);
}

TEST(Matrix, RowOperations)
{
    auto m = FpMatrix::from_rows(Prime(7), {{1, 2}, {3, 4}});
    m.swap_rows(0, 1);
    EXPECT_EQ(m(0, 0), 3u);
    m.scale_row(0, FpScalar(5, Prime(7)));
    EXPECT_EQ(m(0, 0), 1u);
    m.add_row_multiple(1, 0, FpScalar(-1, Prime(7)));
    EXPECT_EQ(m(1, 0), 0u);
    EXPECT_EQ(m.transpose()(1, 0), m(0, 1));
}
