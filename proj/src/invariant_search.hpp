#pragma once

#include <modp/invariants.hpp>

namespace modp::detail {

// Tightens result.lower towards result.upper by searching r = vertices -
// (lower + 1), r - 1, ... until a level is exhausted or the budget runs out.
// One budget is shared by all levels.
void descend_by_search(InvariantResult & result, const ComplexDescriptor & source, const SearchBudget & budget);

} // namespace modp::detail
