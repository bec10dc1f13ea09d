#pragma once

// s_p of skeleta of simplices and of universal complexes X(F_p^n).
//
// s_p(K) = (#vertices of K) - r, with r the least dimension admitting a
// nondegenerate map K -> X(F_p^r). Vertices of the skeleton Δ^m_(k) are
// 0..m, so s_p(Δ^m_(k)) = m + 1 - r.

#include <modp/complex.hpp>
#include <modp/search.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modp {

enum class Method { ClosedForm, Search, Cached, Registry };

const char * to_string(Method method) noexcept;

// How one side of the value was established. `rule` names the closed-form
// argument ("full-simplex", "vandermonde", "sp-two-construction", ...).
struct BoundSource {
    Method method = Method::ClosedForm;
    std::string rule;
};

struct InvariantResult {
    InvariantResult(ComplexDescriptor c, Prime prime) : complex(std::move(c)), p(prime) {}

    ComplexDescriptor complex;
    Prime p;
    int lower = 0;
    int upper = 0;
    BoundSource lower_source;
    BoundSource upper_source;
    // Nondegenerate map into X(F_p^r) with r = vertices - lower.
    std::optional<VertexMap> witness;
    // r = vertices - upper - 1 at which search ended ExhaustedNone.
    std::optional<int> nonexistence_r;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return lower == upper; }
    // Throws PreconditionError for an interval.
    int value() const;
    // "s_3 = 2 (closed-form + search)" or "s_3 in [5, 7] (undecided within budget)".
    std::string summary() const;
};

// Validates 0 <= k <= m, m >= 1; throws DomainError otherwise.
void require_skeleton_args(int m, int k);

InvariantResult sp_skeleton(int m, int k, Prime p, const SearchBudget & budget = {});

// s_p(Δ^m_(k)) >= 2. Requires m >= 2, 0 <= k <= m.
bool sp_geq_two(int m, int k, Prime p);

// The closed classification of s_p(Δ^m_(k)) = 1, written in terms of m.
// Requires m >= 2, 0 <= k <= m.
bool sp_equals_one(int m, int k, Prime p);

// A solution of
//   x1 + x11 >= k + 1,  x2 + x11 >= k + 1,
//   x1 + x2 + x11 - floor((x11 + p - 2) / (p - 1)) >= k
// with x1 + x2 + x11 <= m - 1.
struct Sp2Certificate {
    int x1 = 0;
    int x2 = 0;
    int x11 = 0;
    // m - 1: the room the solution has to fit in.
    int M = 0;

    int sum() const noexcept { return x1 + x2 + x11; }
    bool satisfies(int k, Prime p) const noexcept;

    friend bool operator==(const Sp2Certificate &, const Sp2Certificate &) = default;
};

// The minimal-sum solution (sum k + floor(k/p) + 1, or + 2 when
// k = p - 1 mod p) if it fits, else none.
std::optional<Sp2Certificate> solve_sp2_system(int m, int k, Prime p);

// Nondegenerate Δ^m_(k) -> X(F_p^{m-1}) built from a certificate: vertices
// 0..m-2 go to the basis, vertex m-1 and m carry the certificate pattern.
VertexMap sp2_witness_map(int m, int k, Prime p, const Sp2Certificate & certificate);

// Least n with p^n >= 1 + sum_{j=0..k} (p-1)^j C(m, j).
int greedy_target_dimension(int m, int k, Prime p);

// m + 1 - greedy_target_dimension(m, k, p).
int sp_lower_bound_log(int m, int k, Prime p);

// Inductive construction into X(F_p^n): vertices 0..k go to e_1..e_{k+1},
// every later vertex to the lexicographically first vector outside the span
// combinations of at most k earlier images. Throws PreconditionError if
// (p-1) C(m,1) + ... + (p-1)^k C(m,k) >= p^n - 1.
VertexMap greedy_skeleton_map(int m, int k, Prime p, int n);

// f(i) = (1, i, i^2, ..., i^k) for i = 0..m-1 and f(m) = e_{k+1}, into
// X(F_p^{k+1}). Requires m <= p and k <= m - 1.
VertexMap vandermonde_skeleton_map(int m, int k, Prime p);

// Basis images for vertices 0..m-1 and the all-ones vector for vertex m,
// into X(F_p^m). Nondegenerate for k <= m - 1.
VertexMap standard_skeleton_map(int m, Prime p);

// Reinterprets a 0/1 coordinate table over F_2 modulo q and re-verifies it
// against `source`. Throws PreconditionError for non-0/1 input and
// LiftFailure carrying the first dependent simplex.
VertexMap lift_mod_p(const ComplexDescriptor & source, const VertexMap & map, Prime q);

// Least prime p with p > (r+1)^{(r+1)/2} / 2^r, r = m - s2, decided exactly
// as p^2 4^r > (r+1)^{r+1}. Above it, every r x r 0/1 matrix that is
// invertible over F_2 stays invertible mod p.
std::uint64_t min_safe_prime(int m, int s2);

struct MonotonicityViolation {
    // "s(m+1,k+1) <= s(m,k)", "s(m,k) <= s(m+1,k)" or "s(m+1,k) <= s(m,k)+1".
    std::string rule;
    int m = 0;
    int k = 0;
    int lhs = 0;
    int rhs = 0;
};

using SkeletonTable = std::map<std::pair<int, int>, int>;

// Checks the three embedding inequalities between every pair of cells that
// are both present.
std::vector<MonotonicityViolation> monotonicity_audit(const SkeletonTable & table);

// s_q(X(F_{p_src}^{n_src})).
InvariantResult sp_universal(Prime p_src, int n_src, Prime q, const SearchBudget & budget = {});

// X(F_2^4) -> X(F_3^5): v -> v for support size != 3, v -> v + e_5 otherwise.
VertexMap build_f24_to_f35_map();

// X(F_3^3) -> X(F_2^5): both vectors of each scalar orbit share an image;
// the 13 images are e_1..e_5 and the first eight weight-3 vectors.
VertexMap build_f33_to_f25_map();

// Vertex i of X(F_p^n) to its own vector.
VertexMap universal_identity_map(Prime p, int n);

} // namespace modp
