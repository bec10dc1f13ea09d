#include <modp/complex.hpp>
#include <modp/errors.hpp>
#include <modp/invariants.hpp>
#include <modp/oracles.hpp>
#include <modp/search.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace modp;

namespace {

VertexMap triangle_map()
{
    VertexMap f{Prime(2), 2, {}};
    f.assignments.emplace(0, FpVector(Prime(2), {1, 0}));
    f.assignments.emplace(1, FpVector(Prime(2), {0, 1}));
    f.assignments.emplace(2, FpVector(Prime(2), {1, 1}));
    return f;
}

} // namespace

TEST(CheckNondegenerate, TriangleExamples)
{
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), triangle_map()));
    auto report = check_nondegenerate(ComplexDescriptor::skeleton(2, 2), triangle_map());
    EXPECT_FALSE(report);
    EXPECT_EQ(report.violating_simplex, (std::vector<int>{0, 1, 2}));
}

TEST(CheckNondegenerate, StandardMapOnSkeleta)
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 2; m <= 6; ++m)
            for (int k = 0; k <= m - 1; ++k)
                EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(m, k), standard_skeleton_map(m, Prime(p))))
                    << "m=" << m << " k=" << k << " p=" << p;
    EXPECT_FALSE(check_nondegenerate(ComplexDescriptor::skeleton(4, 4), standard_skeleton_map(4, Prime(3))));
}

TEST(CheckNondegenerate, InputErrors)
{
    auto f = triangle_map();
    f.assignments.erase(2);
    EXPECT_THROW(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), f), IncompleteMapError);

    auto zero = triangle_map();
    zero.assignments.at(1) = FpVector(Prime(2), 2);
    EXPECT_THROW(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), zero), DomainError);

    auto shape = triangle_map();
    shape.assignments.at(1) = FpVector(Prime(2), {1, 1, 1});
    EXPECT_THROW(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), shape), ShapeError);
}

TEST(SearchMap, Examples)
{
    auto found = search_map(ComplexDescriptor::skeleton(2, 1), Prime(2), 2);
    EXPECT_EQ(found.status, SearchStatus::Found);
    ASSERT_TRUE(found.witness);
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(2, 1), *found.witness));

    for (std::uint32_t p : {2u, 3u})
        for (int m = 2; m <= 5; ++m)
            for (int k = 1; k <= m; ++k)
                EXPECT_EQ(search_map(ComplexDescriptor::skeleton(m, k), Prime(p), k).status, SearchStatus::ExhaustedNone);
}

TEST(SearchMap, F24IntoF34DoesNotExist)
{
    auto outcome = search_map(ComplexDescriptor::universal(Prime(2), 4), Prime(3), 4);
    EXPECT_EQ(outcome.status, SearchStatus::ExhaustedNone);
    EXPECT_GT(outcome.stats.nodes, 0u);
}

TEST(SearchMap, F24IntoF35Exists)
{
    auto outcome = search_map(ComplexDescriptor::universal(Prime(2), 4), Prime(3), 5);
    ASSERT_EQ(outcome.status, SearchStatus::Found);
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::universal(Prime(2), 4), *outcome.witness));
}

TEST(SearchMap, BudgetStopsSearch)
{
    SearchBudget budget;
    budget.max_nodes = 10;
    auto outcome = search_map(ComplexDescriptor::universal(Prime(2), 4), Prime(3), 4, budget);
    EXPECT_EQ(outcome.status, SearchStatus::BudgetExceeded);
    EXPECT_FALSE(outcome.witness);
}

TEST(SearchMap, WitnessIndependentOfWorkerCount)
{
    const std::vector<std::tuple<ComplexDescriptor, std::uint32_t, int>> cases{
        {ComplexDescriptor::universal(Prime(2), 4), 3, 5},
        {ComplexDescriptor::skeleton(8, 3), 3, 5},
        {ComplexDescriptor::skeleton(7, 1), 2, 3},
        {ComplexDescriptor::explicit_complex(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {1, 3, 5}}), 2, 3},
    };
    for (const auto & [source, p, r] : cases) {
        auto single = search_map(source, Prime(p), r);
        for (unsigned workers : {2u, 4u, 7u}) {
            SearchBudget budget;
            budget.worker_count = workers;
            auto multi = search_map(source, Prime(p), r, budget);
            EXPECT_EQ(multi.status, single.status) << source.canonical_string() << " workers " << workers;
            EXPECT_EQ(multi.witness, single.witness) << source.canonical_string() << " workers " << workers;
        }
    }
}

TEST(SearchMap, AgreesWithUnreducedOracleOnSkeleta)
{
    for (std::uint32_t p : {2u, 3u})
        for (int m = 2; m <= 5; ++m)
            for (int k = 0; k < m; ++k)
                for (int r = k + 1; r <= 3; ++r) {
                    auto source = ComplexDescriptor::skeleton(m, k);
                    bool fast = search_map(source, Prime(p), r).status == SearchStatus::Found;
                    bool slow = oracle::brute_force_map(source, Prime(p), r).has_value();
                    EXPECT_EQ(fast, slow) << "m=" << m << " k=" << k << " p=" << p << " r=" << r;
                }
}

TEST(SearchMap, AllSymmetryFlagCombinationsAgree)
{
    auto source = ComplexDescriptor::skeleton(6, 2);
    for (int r : {3, 4})
        for (int mask = 0; mask < 8; ++mask) {
            SymmetryFlags flags{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
            auto outcome = search_map(source, Prime(2), r, {}, flags);
            EXPECT_EQ(outcome.status, r == 3 ? SearchStatus::ExhaustedNone : SearchStatus::Found)
                << "r=" << r << " mask=" << mask;
        }
}

TEST(SearchMap, DimensionPrefilter)
{
    auto outcome = search_map(ComplexDescriptor::skeleton(3, 3), Prime(2), 3);
    EXPECT_EQ(outcome.status, SearchStatus::ExhaustedNone);
    EXPECT_EQ(outcome.stats.nodes, 0u);
}

TEST(Reweighting, IdentityAndScaling)
{
    auto f = vandermonde_skeleton_map(5, 2, Prime(5));
    EXPECT_EQ(apply_scalar_reweighting(f, {}), f);

    std::map<int, FpScalar> ones;
    for (int v = 0; v <= 5; ++v)
        ones.emplace(v, FpScalar(1, Prime(5)));
    EXPECT_EQ(apply_scalar_reweighting(f, ones), f);

    auto g = search_map(ComplexDescriptor::skeleton(6, 3), Prime(3), 5).witness;
    ASSERT_TRUE(g);
    std::map<int, FpScalar> twos;
    for (int v = 0; v <= 6; ++v)
        twos.emplace(v, FpScalar(2, Prime(3)));
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(6, 3), apply_scalar_reweighting(*g, twos)));

    const std::uint64_t seed = 4242;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<int, FpScalar> eps;
        for (int v = 0; v <= 5; ++v)
            eps.emplace(v, FpScalar(static_cast<std::int64_t>(1 + rng() % 4), Prime(5)));
        ASSERT_TRUE(check_nondegenerate(ComplexDescriptor::skeleton(5, 2), apply_scalar_reweighting(f, eps)))
            << "seed " << seed << " trial " << trial;
    }
}

TEST(CanonicalWitness, NormalizesLeadingCoordinate)
{
    VertexMap f{Prime(3), 3, {}};
    f.assignments.emplace(0, FpVector(Prime(3), {2, 0, 1}));
    f.assignments.emplace(1, FpVector(Prime(3), {0, 1, 1}));
    auto c = canonical_witness(f);
    EXPECT_EQ(c.assignments.at(0), FpVector(Prime(3), {1, 0, 2}));
    EXPECT_EQ(c.assignments.at(1), FpVector(Prime(3), {0, 1, 1}));

    auto w = search_map(ComplexDescriptor::skeleton(4, 1), Prime(2), 3).witness;
    ASSERT_TRUE(w);
    EXPECT_EQ(canonical_witness(canonical_witness(*w)), canonical_witness(*w));
}
