#pragma once

// End-to-end verification suite: reference tables, constructions,
// nonexistence results, counting and property checks.

#include <modp/invariants.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace modp {

enum class CriterionStatus { Pass, Fail, Skipped, SkippedSlow };

const char * to_string(CriterionStatus status) noexcept;

struct CriterionResult {
    int id = 0;
    std::string name;
    CriterionStatus status = CriterionStatus::Fail;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool skip_slow = false;
    unsigned threads = 1;
    std::uint64_t seed = 20240611;
    // Cap for the X(F_3^3) -> X(F_2^4) exhaustion.
    double slow_budget_seconds = 1800.0;
    // Cases per property suite.
    int property_cases = 100;
    // Restrict to these criterion ids; empty means all.
    std::vector<int> only;
};

// Called after each criterion completes.
using CriterionCallback = std::function<void(const CriterionResult &)>;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions & options, const CriterionCallback & on_result = {});

// Outcome of one seeded property suite.
struct PropertyReport {
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

PropertyReport property_rank_invariance(std::uint64_t seed, int cases);
PropertyReport property_downward_closure(std::uint64_t seed, int cases);
PropertyReport property_reweighting(std::uint64_t seed, int cases);
PropertyReport property_canonical_idempotence(std::uint64_t seed, int cases);
PropertyReport property_reduced_vs_unreduced(std::uint64_t seed, int cases);

// Random explicit complex on `vertices` vertices with up to `facets` facets.
ComplexDescriptor random_complex(std::uint64_t seed, int vertices, int facets, int max_facet_size);

} // namespace modp
