#pragma once

#include <modp/complex.hpp>
#include <modp/fp.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace modp {

// Source vertex index -> image in F_p^r.
struct VertexMap {
    Prime p;
    int r;
    std::map<int, FpVector> assignments;

    // Throws ShapeError/DomainError if an image is zero or has the wrong
    // length or modulus.
    void validate() const;

    friend bool operator==(const VertexMap &, const VertexMap &) = default;
};

struct NondegeneracyReport {
    bool nondegenerate = true;
    // First face (sorted source vertices) whose images are dependent.
    std::vector<int> violating_simplex;

    explicit operator bool() const noexcept { return nondegenerate; }
};

// True iff every simplex of `source` maps to a linearly independent set.
// Throws IncompleteMapError if a source vertex is unassigned.
NondegeneracyReport check_nondegenerate(const ComplexDescriptor & source, const VertexMap & map);

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
    unsigned worker_count = 1;
};

// Exactness-preserving reductions used by search_map.
struct SymmetryFlags {
    // Images range over scalar-orbit representatives only.
    bool scalar_orbits = true;
    // Each image is either in the span of the images so far (which is
    // span(e_1..e_s)) or the next basis vector e_{s+1}.
    bool basis_pinning = true;
    // The first image that is not a new basis vector has 0/1 coordinates.
    // Only meaningful together with basis_pinning.
    bool zero_one_first = true;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

const char * to_string(SearchStatus status) noexcept;

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    std::size_t tasks = 0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExceeded;
    std::optional<VertexMap> witness;
    SearchStats stats;
};

// Decides whether a nondegenerate map source -> X(F_p^r) exists. A Found
// witness has been re-verified by check_nondegenerate. The witness is the
// first leaf of the reduced tree in depth-first order, independent of
// worker_count.
SearchOutcome search_map(const ComplexDescriptor & source, Prime p, int r, const SearchBudget & budget = {},
    const SymmetryFlags & symmetry = {});

// g(v) = eps_v * f(v); vertices absent from `epsilons` keep eps_v = 1.
VertexMap apply_scalar_reweighting(const VertexMap & map, const std::map<int, FpScalar> & epsilons);

// Scales each image so its first nonzero coordinate is 1.
VertexMap canonical_witness(const VertexMap & map);

} // namespace modp
