#include <modp/errors.hpp>
#include <modp/invariants.hpp>
#include <modp/oracles.hpp>
#include <modp/reference_tables.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace modp;

namespace {

std::uint64_t binomial(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace

TEST(SpSkeleton, Examples)
{
    EXPECT_EQ(sp_skeleton(6, 3, Prime(3)).value(), 2);
    EXPECT_EQ(sp_skeleton(6, 2, Prime(2)).value(), 3);
    EXPECT_EQ(sp_skeleton(4, 1, Prime(5)).value(), 3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int m = 1; m <= 9; ++m)
            EXPECT_EQ(sp_skeleton(m, m, Prime(p)).value(), 0);
    EXPECT_THROW(sp_skeleton(3, 4, Prime(2)), DomainError);
    EXPECT_THROW(sp_skeleton(0, 0, Prime(2)), DomainError);
}

TEST(SpSkeleton, SummaryNamesTheMethods)
{
    EXPECT_EQ(sp_skeleton(6, 3, Prime(3)).summary(), "s_3 = 2 (closed-form + search)");
    EXPECT_EQ(sp_skeleton(2, 2, Prime(7)).summary(), "s_7 = 0 (closed-form)");
}

TEST(SpSkeleton, StarvedBudgetGivesInterval)
{
    SearchBudget budget;
    budget.max_nodes = 1;
    auto result = sp_skeleton(9, 2, Prime(3), budget);
    EXPECT_FALSE(result.exact());
    EXPECT_LE(result.lower, 6);
    EXPECT_GE(result.upper, 6);
    EXPECT_THROW(result.value(), PreconditionError);
    EXPECT_NE(result.summary().find("undecided within budget"), std::string::npos);
}

TEST(SpSkeleton, WitnessesCertifyTheValue)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 2; m <= 7; ++m)
            for (int k = 0; k <= m; ++k) {
                auto result = sp_skeleton(m, k, Prime(p));
                ASSERT_TRUE(result.exact());
                ASSERT_TRUE(result.witness) << "m=" << m << " k=" << k << " p=" << p;
                EXPECT_EQ(result.witness->r, m + 1 - result.value());
                EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(m, k), *result.witness));
            }
}

TEST(SpSkeleton, Mod3TableValues)
{
    for (const auto & cell : reference_mod3_table()) {
        if (cell.m > 9)
            continue;
        EXPECT_EQ(sp_skeleton(cell.m, cell.k, Prime(3)).value(), cell.value) << "m=" << cell.m << " k=" << cell.k;
    }
}

// Row 10 for p = 3 beyond the reference fixtures, cross-checked by pure search.
TEST(SpSkeleton, Mod3RowTen)
{
    const std::vector<int> expected{10, 8, 6, 6, 5, 3, 2, 1, 1, 1, 0};
    for (int k = 0; k <= 10; ++k) {
        auto result = sp_skeleton(10, k, Prime(3));
        EXPECT_EQ(result.value(), expected[static_cast<std::size_t>(k)]) << "k=" << k;
        if (auto ref = reference_value(reference_mod3_table(), 3, 10, k)) {
            EXPECT_EQ(result.value(), *ref) << "k=" << k;
        }
        if (k >= 2 && k <= 7) {
            auto by_search = oracle::skeleton_value_by_search(10, k, Prime(3));
            ASSERT_TRUE(by_search);
            EXPECT_EQ(*by_search, result.value()) << "k=" << k;
        }
    }
}

TEST(SpSkeleton, SmallPrimeTableValuesUpToSeven)
{
    for (const auto & cell : reference_small_prime_table()) {
        if (cell.m > 7 || (cell.p == 5 && cell.m == 6 && cell.k <= 2))
            continue;
        EXPECT_EQ(sp_skeleton(cell.m, cell.k, Prime(static_cast<std::uint32_t>(cell.p))).value(), cell.value)
            << "p=" << cell.p << " m=" << cell.m << " k=" << cell.k;
    }
}

// The reference fixture has 5 and 4 for p=5 at (6,1) and (6,2). Seven vertices
// cannot be pairwise independent in F_5^2 (only 6 lines), and no 7 points of
// PG(2,5) are in general position (arcs have at most 6 points), so the values
// are 4 and 3.
TEST(SpSkeleton, P5RowSixEntries)
{
    EXPECT_EQ(enumerate_orbit_representatives(Prime(5), 2).size(), 6u);
    EXPECT_EQ(sp_skeleton(6, 1, Prime(5)).value(), 4);
    EXPECT_EQ(sp_skeleton(6, 2, Prime(5)).value(), 3);
    // Six vertices still fit on the six lines.
    EXPECT_TRUE(oracle::brute_force_map(ComplexDescriptor::skeleton(5, 1), Prime(5), 2));
}

TEST(SpSkeleton, AgreesWithPureSearch)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 2; m <= 6; ++m)
            for (int k = 0; k <= m; ++k) {
                auto by_search = oracle::skeleton_value_by_search(m, k, Prime(p));
                ASSERT_TRUE(by_search);
                EXPECT_EQ(sp_skeleton(m, k, Prime(p)).value(), *by_search) << "m=" << m << " k=" << k << " p=" << p;
            }
}

TEST(SpGeqTwo, Examples)
{
    EXPECT_TRUE(sp_geq_two(6, 3, Prime(3)));
    EXPECT_FALSE(sp_geq_two(4, 2, Prime(3)));
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int m = 2; m <= 12; ++m)
            EXPECT_FALSE(sp_geq_two(m, m - 1, Prime(p)));
}

TEST(SpEqualsOne, MatchesComputedValues)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 2; m <= 7; ++m)
            for (int k = 0; k < m; ++k)
                EXPECT_EQ(sp_equals_one(m, k, Prime(p)), sp_skeleton(m, k, Prime(p)).value() == 1)
                    << "m=" << m << " k=" << k << " p=" << p;
}

TEST(Sp2System, Examples)
{
    auto a = solve_sp2_system(6, 3, Prime(3));
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, (Sp2Certificate{1, 1, 3, 5}));

    EXPECT_FALSE(solve_sp2_system(4, 2, Prime(3)));

    // k = 1 = p - 1, so this is the k = p - 1 (mod p) branch; (0,0,2) fails
    // the third inequality.
    auto b = solve_sp2_system(5, 1, Prime(2));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->sum(), 3);
    EXPECT_TRUE(b->satisfies(1, Prime(2)));
    EXPECT_FALSE((Sp2Certificate{0, 0, 2, 4}).satisfies(1, Prime(2)));
}

TEST(Sp2System, MatchesExhaustiveMinimization)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int m = 2; m <= 20; ++m)
            for (int k = 0; k <= m; ++k) {
                auto fast = solve_sp2_system(m, k, Prime(p));
                auto slow = oracle::minimize_sp2_system(k, Prime(p), m - 1);
                bool fits = slow && slow->sum() <= m - 1;
                ASSERT_EQ(fast.has_value(), fits) << "m=" << m << " k=" << k << " p=" << p;
                if (fast) {
                    EXPECT_EQ(fast->sum(), slow->sum());
                    EXPECT_TRUE(fast->satisfies(k, Prime(p)));
                    EXPECT_TRUE(sp_geq_two(m, k, Prime(p)));
                }
            }
}

TEST(Sp2System, WitnessIsNondegenerate)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 3; m <= 9; ++m)
            for (int k = 1; k < m; ++k)
                if (auto c = solve_sp2_system(m, k, Prime(p))) {
                    auto f = sp2_witness_map(m, k, Prime(p), *c);
                    EXPECT_EQ(f.r, m - 1);
                    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(m, k), f))
                        << "m=" << m << " k=" << k << " p=" << p;
                }
}

TEST(LowerBoundLog, Examples)
{
    EXPECT_EQ(sp_lower_bound_log(6, 2, Prime(2)), 2);
    EXPECT_EQ(sp_lower_bound_log(5, 2, Prime(3)), 2);
    for (std::uint32_t p : {2u, 3u, 7u})
        for (int m = 1; m <= 8; ++m)
            EXPECT_EQ(sp_lower_bound_log(m, 0, Prime(p)), m);
}

TEST(LowerBoundLog, MatchesDirectPowerComparison)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 1; m <= 10; ++m)
            for (int k = 0; k <= m; ++k) {
                std::uint64_t total = 2;
                std::uint64_t pw = 1;
                for (int j = 1; j <= k; ++j) {
                    pw *= p - 1;
                    total += pw * binomial(m, j);
                }
                int n = 0;
                std::uint64_t power = 1;
                while (power < total) {
                    power *= p;
                    ++n;
                }
                EXPECT_EQ(greedy_target_dimension(m, k, Prime(p)), n) << "m=" << m << " k=" << k << " p=" << p;
            }
}

TEST(GreedyMap, Examples)
{
    auto f = greedy_skeleton_map(4, 1, Prime(2), 3);
    EXPECT_EQ(f.assignments.size(), 5u);
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(4, 1), f));

    auto full = greedy_skeleton_map(3, 3, Prime(3), 4);
    for (int i = 0; i <= 3; ++i)
        EXPECT_EQ(full.assignments.at(i), FpVector::unit(Prime(3), 4, static_cast<std::size_t>(i)));
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(3, 3), full));

    EXPECT_THROW(greedy_skeleton_map(6, 2, Prime(2), 4), PreconditionError);
}

TEST(GreedyMap, RandomValidParameters)
{
    const std::uint64_t seed = 99;
    std::mt19937_64 rng(seed);
    int built = 0;
    while (built < 100) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng() % 3];
        int m = 1 + static_cast<int>(rng() % 8);
        int k = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 1));
        int n = greedy_target_dimension(m, k, Prime(p)) + static_cast<int>(rng() % 2);
        if (checked_power(p, n) > 4096)
            continue;
        auto f = greedy_skeleton_map(m, k, Prime(p), n);
        ASSERT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(m, k), f))
            << "seed " << seed << " m=" << m << " k=" << k << " p=" << p << " n=" << n;
        ++built;
    }
}

TEST(VandermondeMap, Examples)
{
    auto f = vandermonde_skeleton_map(2, 1, Prime(2));
    EXPECT_EQ(f.assignments.at(0), FpVector(Prime(2), {1, 0}));
    EXPECT_EQ(f.assignments.at(1), FpVector(Prime(2), {1, 1}));
    EXPECT_EQ(f.assignments.at(2), FpVector(Prime(2), {0, 1}));
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), f));

    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto g = vandermonde_skeleton_map(static_cast<int>(p), static_cast<int>(p) - 1, Prime(p));
        EXPECT_EQ(g.r, static_cast<int>(p));
        EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(static_cast<int>(p), static_cast<int>(p) - 1), g));
        EXPECT_EQ(sp_skeleton(static_cast<int>(p), static_cast<int>(p) - 1, Prime(p)).value(), 1);
    }
    EXPECT_THROW(vandermonde_skeleton_map(4, 1, Prime(3)), PreconditionError);
}

TEST(MinSafePrime, Examples)
{
    // r = m - s2.
    EXPECT_EQ(min_safe_prime(5, 4), 2u);
    EXPECT_EQ(min_safe_prime(6, 4), 2u);
    EXPECT_EQ(min_safe_prime(15, 11), 5u);
}

TEST(MinSafePrime, MatchesFloatingBound)
{
    for (int r = 1; r <= 14; ++r) {
        double bound = std::pow(r + 1.0, (r + 1.0) / 2.0) / std::pow(2.0, r);
        std::uint64_t p = 2;
        while (static_cast<double>(p) <= bound)
            p = next_prime_after(p);
        EXPECT_EQ(min_safe_prime(r + 3, 3), p) << "r=" << r;
    }
}

TEST(Monotonicity, ReferenceTablesAreConsistent)
{
    SkeletonTable mod3;
    for (const auto & c : reference_mod3_table())
        if (c.m <= 9)
            mod3[{c.m, c.k}] = c.value;
    EXPECT_TRUE(monotonicity_audit(mod3).empty());

    SkeletonTable p2;
    for (const auto & c : reference_small_prime_table())
        if (c.p == 2)
            p2[{c.m, c.k}] = c.value;
    EXPECT_TRUE(monotonicity_audit(p2).empty());
}

TEST(Monotonicity, InjectedFaultIsReported)
{
    SkeletonTable t;
    for (const auto & c : reference_mod3_table())
        if (c.m <= 9)
            t[{c.m, c.k}] = c.value;
    t[{9, 0}] += 1;
    EXPECT_EQ(monotonicity_audit(t).size(), 1u);
}
