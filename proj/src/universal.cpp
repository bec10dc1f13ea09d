#include <modp/invariants.hpp>

#include <modp/errors.hpp>

#include "invariant_search.hpp"

#include <algorithm>
#include <chrono>

namespace modp {

VertexMap universal_identity_map(Prime p, int n)
{
    VertexMap map{p, n, {}};
    auto vertices = enumerate_vertices(p, n);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        map.assignments.emplace(static_cast<int>(i), vertices[i]);
    return map;
}

VertexMap build_f24_to_f35_map()
{
    const Prime two{2};
    const Prime three{3};
    VertexMap map{three, 5, {}};
    auto vertices = enumerate_vertices(two, 4);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto & v = vertices[i];
        std::vector<std::int64_t> coords(v.coords().begin(), v.coords().end());
        coords.push_back(support(v).size() == 3 ? 1 : 0);
        map.assignments.emplace(static_cast<int>(i), FpVector(three, std::move(coords)));
    }
    return map;
}

VertexMap build_f33_to_f25_map()
{
    const Prime two{2};
    const Prime three{3};

    // Thirteen vectors of F_2^5 with odd weight: no three of them sum to
    // zero, so any three distinct ones are independent.
    std::vector<FpVector> targets;
    for (int i = 0; i < 5; ++i)
        targets.push_back(FpVector::unit(two, 5, static_cast<std::size_t>(i)));
    for (const auto & v : enumerate_vertices(two, 5)) {
        if (targets.size() == 13)
            break;
        if (support(v).size() == 3)
            targets.push_back(v);
    }

    auto reps = enumerate_orbit_representatives(three, 3);
    VertexMap map{two, 5, {}};
    auto vertices = enumerate_vertices(three, 3);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto v = vertices[i];
        auto lead = v.leading_index();
        auto normalized = v * scalar_inverse(v.at(lead));
        auto orbit = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), normalized) - reps.begin());
        map.assignments.emplace(static_cast<int>(i), targets.at(orbit));
    }
    return map;
}

namespace {

// Raises the target dimension from the dimension bound until a map exists.
void ascend_by_search(InvariantResult & result, const ComplexDescriptor & source, const SearchBudget & budget)
{
    const int vertices = source.vertex_count();
    const auto start = std::chrono::steady_clock::now();
    for (int r = vertices - result.upper; result.lower < result.upper; ++r) {
        SearchBudget level = budget;
        if (budget.max_nodes) {
            if (result.nodes >= *budget.max_nodes)
                return;
            level.max_nodes = *budget.max_nodes - result.nodes;
        }
        if (budget.max_seconds) {
            double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (used >= *budget.max_seconds)
                return;
            level.max_seconds = *budget.max_seconds - used;
        }
        SearchOutcome outcome;
        try {
            outcome = search_map(source, result.p, r, level);
        } catch (const BudgetError &) {
            return;
        }
        result.nodes += outcome.stats.nodes;
        switch (outcome.status) {
        case SearchStatus::Found:
            result.lower = vertices - r;
            result.lower_source = {Method::Search, "witness at r=" + std::to_string(r)};
            result.witness = std::move(outcome.witness);
            return;
        case SearchStatus::ExhaustedNone:
            result.upper = vertices - r - 1;
            result.upper_source = {Method::Search, "exhausted r=" + std::to_string(r)};
            result.nonexistence_r = r;
            break;
        case SearchStatus::BudgetExceeded:
            return;
        }
    }
}

} // namespace

InvariantResult sp_universal(Prime p_src, int n_src, Prime q, const SearchBudget & budget)
{
    if (n_src < 1)
        throw DomainError("n must be >= 1");
    const auto source = ComplexDescriptor::universal(p_src, n_src);
    const int vertices = source.vertex_count();
    InvariantResult result{source, q};
    result.upper = vertices - n_src;
    result.upper_source = {Method::ClosedForm, "dimension"};

    auto settle_lower = [&](int value, std::string rule, VertexMap witness) {
        result.lower = value;
        result.lower_source = {Method::ClosedForm, std::move(rule)};
        result.witness = std::move(witness);
    };

    if (q == p_src) {
        settle_lower(vertices - n_src, "identity", universal_identity_map(p_src, n_src));
        return result;
    }

    bool constructed = false;
    if (p_src.value() == 2) {
        // Coordinates of X(F_2^n) are 0/1; reading them mod q works whenever
        // no basis has a determinant divisible by q, which holds above the
        // Hadamard bound and is re-checked here in every case.
        try {
            auto lifted = lift_mod_p(source, universal_identity_map(p_src, n_src), q);
            settle_lower(vertices - n_src,
                q.value() >= min_safe_prime(vertices, vertices - n_src) ? "hadamard-lift" : "zero-one-lift",
                std::move(lifted));
            return result;
        } catch (const LiftFailure &) {
        }
    }
    if (p_src.value() == 2 && n_src == 4 && q.value() == 3) {
        settle_lower(vertices - 5, "f24-to-f35", build_f24_to_f35_map());
        constructed = true;
    } else if (p_src.value() == 3 && n_src == 3 && q.value() == 2) {
        settle_lower(vertices - 5, "orbit-pairing", build_f33_to_f25_map());
        constructed = true;
    }

    if (constructed) {
        if (! check_nondegenerate(source, *result.witness))
            throw Error("internal error: constructed witness is degenerate");
        detail::descend_by_search(result, source, budget);
        return result;
    }

    // Distinct basis vectors for every vertex always work.
    VertexMap trivial{q, vertices, {}};
    for (int v = 0; v < vertices; ++v)
        trivial.assignments.emplace(v, FpVector::unit(q, static_cast<std::size_t>(vertices), static_cast<std::size_t>(v)));
    settle_lower(0, "distinct-basis", std::move(trivial));
    ascend_by_search(result, source, budget);
    return result;
}

} // namespace modp
