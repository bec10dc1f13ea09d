#pragma once

// Simplicial-complex descriptors and combinatorics of the universal complexes
// X(F_p^n), whose simplices are the linearly independent sets of nonzero
// vectors. The universal complex is never stored as a simplex list; membership
// is a rank test.

#include <modp/fp.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace modp {

using BigInt = boost::multiprecision::cpp_int;

// Default refusal threshold for materializing p^n points.
inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 20;

// Vertices are 0..vertex_count-1. Stored facets are sorted and contain no
// facet inside another; vertices not covered by any facet are isolated.
struct ExplicitComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> maximal_simplices;
};

// The k-skeleton of the m-simplex on vertices 0..m.
struct SkeletonComplex {
    int m = 0;
    int k = 0;
};

// X(F_p^n); vertex i is enumerate_vertices(p, n)[i].
struct UniversalComplex {
    Prime p;
    int n;
};

class ComplexDescriptor {
public:
    using Variant = std::variant<ExplicitComplex, SkeletonComplex, UniversalComplex>;

    static ComplexDescriptor explicit_complex(int vertex_count, std::vector<std::vector<int>> maximal_simplices);
    static ComplexDescriptor skeleton(int m, int k);
    static ComplexDescriptor universal(Prime p, int n);

    const Variant & variant() const noexcept { return value_; }
    const SkeletonComplex * as_skeleton() const noexcept { return std::get_if<SkeletonComplex>(&value_); }
    const UniversalComplex * as_universal() const noexcept { return std::get_if<UniversalComplex>(&value_); }
    const ExplicitComplex * as_explicit() const noexcept { return std::get_if<ExplicitComplex>(&value_); }

    // Throws BudgetError for universal complexes above the enumeration guard.
    int vertex_count() const;
    int dimension() const;

    // Stable textual key, e.g. "skeleton(6,3)" or "universal(2,4)".
    std::string canonical_string() const;

private:
    explicit ComplexDescriptor(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

std::uint64_t checked_power(std::uint64_t base, int exponent);

// Vertex-index form. Duplicate indices make a set that is not a simplex.
bool is_simplex(const ComplexDescriptor & complex, std::span<const int> vertices);

// Vector form for X(F_p^n): true iff the vectors are linearly independent.
// Throws ShapeError on a wrong length/modulus, DomainError on a zero vector.
bool is_simplex(const UniversalComplex & complex, std::span<const FpVector> vectors);

// All nonzero vectors of F_p^n in lexicographic order (first coordinate most
// significant). Throws BudgetError if p^n exceeds the guard.
std::vector<FpVector> enumerate_vertices(Prime p, int n, std::uint64_t guard = kDefaultEnumerationGuard);

// One vector per scalar orbit, normalized so the first nonzero coordinate is
// 1, in lexicographic order.
std::vector<FpVector> enumerate_orbit_representatives(Prime p, int n, std::uint64_t guard = kDefaultEnumerationGuard);

// Position of a nonzero vector in enumerate_vertices order.
std::size_t vertex_index(const FpVector & v);

// Number of minimal j-nonsimplices of X(F_p^n). Requires n >= 2, 1 <= j <= n.
BigInt count_minimal_nonsimplices(Prime p, int n, int j);

// Brute-force oracle: every (j+1)-set of vertices that is not a simplex while
// all its j-subsets are. Sets are sorted in enumerate_vertices order.
std::vector<std::vector<FpVector>> enumerate_minimal_nonsimplices(Prime p, int n, int j,
    std::uint64_t vertex_guard = 4096);

// Number of neighbours of any vertex of X(F_p^n): p^n - p.
std::uint64_t universal_degree(Prime p, int n);

// Lazily enumerates the simplices of the k-skeleton of the m-simplex, ordered
// by size then lexicographically. With `containing`, only simplices through
// that vertex are produced; with `exact_size`, only simplices of that size.
class SkeletonSimplices {
public:
    SkeletonSimplices(int m, int k, std::optional<int> containing = std::nullopt,
        std::optional<int> exact_size = std::nullopt);

    class iterator {
    public:
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;

        const std::vector<int> & operator*() const { return current_; }
        iterator & operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator & rhs) const { return done_ == rhs.done_ && (done_ || current_ == rhs.current_); }

    private:
        friend class SkeletonSimplices;
        iterator(const SkeletonSimplices * owner, bool done);
        bool advance_combination();
        bool start_size(int size);
        bool accept() const;

        const SkeletonSimplices * owner_ = nullptr;
        bool done_ = true;
        int size_ = 0;
        std::vector<int> current_;
    };

    iterator begin() const { return iterator{this, false}; }
    iterator end() const { return iterator{this, true}; }

private:
    int m_;
    int k_;
    std::optional<int> containing_;
    std::optional<int> exact_size_;
};

// Facets as sorted vertex-index lists. For X(F_p^n) these are all bases, which
// is only feasible for small p^n; `facet_guard` bounds the count.
std::vector<std::vector<int>> maximal_simplices(const ComplexDescriptor & complex,
    std::uint64_t facet_guard = 5'000'000);

} // namespace modp
