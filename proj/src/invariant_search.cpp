#include "invariant_search.hpp"

#include <chrono>

namespace modp::detail {

void descend_by_search(InvariantResult & result, const ComplexDescriptor & source, const SearchBudget & budget)
{
    const int vertices = source.vertex_count();
    const auto start = std::chrono::steady_clock::now();
    while (result.lower < result.upper) {
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
        const int r = vertices - result.lower - 1;
        auto outcome = search_map(source, result.p, r, level);
        result.nodes += outcome.stats.nodes;
        switch (outcome.status) {
        case SearchStatus::Found:
            ++result.lower;
            result.lower_source = {Method::Search, "witness at r=" + std::to_string(r)};
            result.witness = std::move(outcome.witness);
            break;
        case SearchStatus::ExhaustedNone:
            result.upper = result.lower;
            result.upper_source = {Method::Search, "exhausted r=" + std::to_string(r)};
            result.nonexistence_r = r;
            return;
        case SearchStatus::BudgetExceeded:
            return;
        }
    }
}

} // namespace modp::detail
