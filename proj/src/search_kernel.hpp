#pragma once

// Backtracking kernel for nondegenerate maps into X(F_p^r).
//
// Constraint propagation keeps, per source vertex, a count for every target
// orbit of how many already-assigned faces forbid it: a vertex u may take
// image x only if x lies outside span(f(A)) for every assigned set A with
// A + {u} a face. For skeleton sources every unassigned vertex sees the same
// forbidden set, which is kept once.

#include "target_space.hpp"

#include <modp/search.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

namespace modp::detail {

struct SourceModel {
    int vertex_count = 0;
    std::vector<int> order;

    bool is_skeleton = false;
    int skeleton_k = 0;

    std::vector<std::vector<int>> facets;
    std::vector<std::vector<int>> incident;

    static SourceModel from(const ComplexDescriptor & source);
};

// Assignment order: most already-ordered neighbours first, ties by index.
std::vector<int> constraint_degree_order(int vertex_count, const std::vector<std::vector<int>> & facets);

struct SearchControl {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline{};
    std::atomic<bool> budget_hit{false};
    // Lowest task index that has produced a witness.
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
};

enum class DfsResult { Found, Exhausted, Aborted };

class SearchKernel {
public:
    SearchKernel(const SourceModel & source, const TargetSpace & space, const SymmetryFlags & flags,
        SearchControl & control);

    // Candidate image codes for the vertex at `depth`, in search order, that
    // are consistent with the current partial assignment.
    std::vector<std::uint32_t> candidates(int depth) const;

    // Assigns order[depth] := code. Returns false when propagation shows the
    // subtree is empty; pop() must be called either way.
    bool push(int depth, std::uint32_t code);
    void pop(int depth);

    DfsResult run(int depth, std::size_t task_index);

    void flush_nodes();

    // Image codes by source vertex, valid after run() returned Found.
    const std::vector<std::uint32_t> & witness() const noexcept { return witness_; }

private:
    bool allowed(int vertex, std::uint32_t code) const noexcept;
    template <typename F>
    void for_each_candidate(int depth, F && f) const;

    bool mark(int vertex, std::uint32_t orbit);
    bool propagate_skeleton(int depth, std::uint32_t code);
    bool propagate_general(int vertex, std::uint32_t code);
    bool tick();

    const SourceModel & source_;
    const TargetSpace & space_;
    SymmetryFlags flags_;
    SearchControl & control_;
    std::size_t task_index_ = 0;

    std::uint32_t orbit_count_;
    int n_;

    std::vector<std::uint32_t> image_;
    std::vector<char> assigned_;
    std::vector<std::uint32_t> witness_;

    // Pinning state.
    int span_dim_ = 0;
    bool non_basis_seen_ = false;
    std::vector<int> saved_span_dim_;
    std::vector<char> saved_non_basis_;

    // Forbidden-orbit counts: one row (skeleton) or one row per vertex.
    std::vector<std::uint32_t> forbid_;
    std::vector<std::uint32_t> forbidden_total_;
    std::vector<std::uint64_t> log_;
    std::vector<std::size_t> log_start_;

    // Skeleton mode: multiples c * f(order[d]) for c = 1..p-1.
    std::vector<std::uint32_t> multiples_;

    std::vector<std::uint32_t> span_scratch_;
    std::vector<int> unassigned_scratch_;

    std::uint64_t local_nodes_ = 0;
};

} // namespace modp::detail
