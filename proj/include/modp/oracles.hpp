#pragma once

// Slow reference implementations used to cross-check the fast paths. None of
// these share code with the search kernel.

#include <modp/complex.hpp>
#include <modp/invariants.hpp>
#include <modp/search.hpp>

#include <optional>

namespace modp::oracle {

// Plain backtracking over every nonzero vector of F_p^r for every vertex,
// one connected component at a time, testing each face with a rank
// computation. No symmetry reduction. Returns the first map found, if any.
std::optional<VertexMap> brute_force_map(const ComplexDescriptor & source, Prime p, int r);

struct Sp2Minimum {
    int x1 = 0;
    int x2 = 0;
    int x11 = 0;
    int sum() const noexcept { return x1 + x2 + x11; }
};

// Least x1 + x2 + x11 over 0 <= x1, x2, x11 <= bound solving the three
// inequalities, or none.
std::optional<Sp2Minimum> minimize_sp2_system(int k, Prime p, int bound);

// s_p(Δ^m_(k)) from search alone: the least r in k+1..m+1 with a map.
// Returns none if the budget ran out first.
std::optional<int> skeleton_value_by_search(int m, int k, Prime p, const SearchBudget & budget = {});

} // namespace modp::oracle
