#pragma once

// Reference values of s_p for skeleta and universal complexes.
// These are fixtures for verification only; nothing in the library consults
// them to answer a query.

#include <optional>
#include <vector>

namespace modp {

struct ReferenceCell {
    int p = 0;
    int m = 0;
    int k = 0;
    int value = 0;
};

// s_3(Δ^m_(k)) for 2 <= m <= 10, 0 <= k <= m. Row 10 is incomplete.
const std::vector<ReferenceCell> & reference_mod3_table();

// s_p(Δ^m_(k)) for p in {2, 3, 5, 7}, 2 <= m <= 9, 1 <= k <= m, where known.
const std::vector<ReferenceCell> & reference_small_prime_table();

std::optional<int> reference_value(const std::vector<ReferenceCell> & table, int p, int m, int k);

struct UniversalClaim {
    int p_src = 0;
    int n_src = 0;
    int q = 0;
    int value = 0;
    // The claim is only s_q <= value.
    bool upper_bound_only = false;
    // False when the claim has not been checked independently.
    bool verified = true;
};

const std::vector<UniversalClaim> & reference_universal_claims();

} // namespace modp
