#include "search_kernel.hpp"

#include <modp/errors.hpp>

#include <algorithm>

namespace modp::detail {

std::vector<int> constraint_degree_order(int vertex_count, const std::vector<std::vector<int>> & facets)
{
    std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(vertex_count),
        std::vector<char>(static_cast<std::size_t>(vertex_count), 0));
    for (const auto & f : facets)
        for (int a : f)
            for (int b : f)
                if (a != b)
                    adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;

    std::vector<int> order;
    std::vector<int> score(static_cast<std::size_t>(vertex_count), 0);
    std::vector<char> used(static_cast<std::size_t>(vertex_count), 0);
    for (int step = 0; step < vertex_count; ++step) {
        int best = -1;
        for (int v = 0; v < vertex_count; ++v)
            if (! used[static_cast<std::size_t>(v)] &&
                (best < 0 || score[static_cast<std::size_t>(v)] > score[static_cast<std::size_t>(best)]))
                best = v;
        used[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (int u = 0; u < vertex_count; ++u)
            if (adjacent[static_cast<std::size_t>(best)][static_cast<std::size_t>(u)])
                ++score[static_cast<std::size_t>(u)];
    }
    return order;
}

SourceModel SourceModel::from(const ComplexDescriptor & source)
{
    SourceModel model;
    model.vertex_count = source.vertex_count();
    if (auto s = source.as_skeleton()) {
        model.is_skeleton = true;
        model.skeleton_k = s->k;
        for (int v = 0; v < model.vertex_count; ++v)
            model.order.push_back(v);
        return model;
    }
    model.facets = maximal_simplices(source);
    model.incident.assign(static_cast<std::size_t>(model.vertex_count), {});
    for (std::size_t f = 0; f < model.facets.size(); ++f)
        for (int v : model.facets[f])
            model.incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    model.order = constraint_degree_order(model.vertex_count, model.facets);
    return model;
}

SearchKernel::SearchKernel(const SourceModel & source, const TargetSpace & space, const SymmetryFlags & flags,
    SearchControl & control) :
    source_(source),
    space_(space),
    flags_(flags),
    control_(control),
    orbit_count_(space.orbit_count()),
    n_(source.vertex_count)
{
    // The 0/1 normalization rescales earlier basis images, which is only
    // invisible when images are taken up to scalars.
    if (! flags_.basis_pinning || ! flags_.scalar_orbits)
        flags_.zero_one_first = false;
    auto n = static_cast<std::size_t>(n_);
    image_.assign(n, 0);
    assigned_.assign(n, 0);
    saved_span_dim_.assign(n + 1, 0);
    saved_non_basis_.assign(n + 1, 0);
    log_start_.assign(n + 1, 0);
    std::size_t rows = source_.is_skeleton ? 1 : n;
    forbid_.assign(rows * orbit_count_, 0);
    forbidden_total_.assign(rows, 0);
    multiples_.assign(n * (space_.p() - 1), 0);
}

bool SearchKernel::allowed(int vertex, std::uint32_t code) const noexcept
{
    auto orbit = space_.orbit_of(code);
    std::size_t row = source_.is_skeleton ? 0 : static_cast<std::size_t>(vertex);
    return forbid_[row * orbit_count_ + orbit] == 0;
}

template <typename F>
void SearchKernel::for_each_candidate(int depth, F && f) const
{
    const int vertex = source_.order[static_cast<std::size_t>(depth)];
    const int r = space_.r();
    const bool restrict01 = flags_.zero_one_first && ! non_basis_seen_;

    if (flags_.scalar_orbits) {
        std::uint32_t in_span = flags_.basis_pinning ? space_.orbits_in_span(span_dim_) : orbit_count_;
        std::uint32_t limit = in_span;
        if (flags_.basis_pinning && span_dim_ < r)
            ++limit;
        for (std::uint32_t orbit = 0; orbit < limit; ++orbit) {
            if (restrict01 && orbit < in_span && ! space_.is_zero_one(orbit))
                continue;
            auto code = space_.representative(orbit);
            if (allowed(vertex, code) && ! f(code))
                return;
        }
        return;
    }

    std::uint32_t span_size = flags_.basis_pinning ? space_.power(span_dim_) : space_.size();
    for (std::uint32_t code = 1; code < span_size; ++code) {
        if (restrict01) {
            auto orbit = space_.orbit_of(code);
            if (space_.representative(orbit) != code || ! space_.is_zero_one(orbit))
                continue;
        }
        if (allowed(vertex, code) && ! f(code))
            return;
    }
    if (flags_.basis_pinning && span_dim_ < r) {
        auto code = space_.power(span_dim_);
        if (allowed(vertex, code))
            f(code);
    }
}

std::vector<std::uint32_t> SearchKernel::candidates(int depth) const
{
    std::vector<std::uint32_t> out;
    for_each_candidate(depth, [&](std::uint32_t code) {
        out.push_back(code);
        return true;
    });
    return out;
}

bool SearchKernel::mark(int vertex, std::uint32_t orbit)
{
    std::size_t row = static_cast<std::size_t>(vertex);
    if (forbid_[row * orbit_count_ + orbit]++ == 0)
        ++forbidden_total_[row];
    log_.push_back((static_cast<std::uint64_t>(row) << 32) | orbit);
    return forbidden_total_[row] < orbit_count_;
}

bool SearchKernel::propagate_skeleton(int depth, std::uint32_t code)
{
    const int k = source_.skeleton_k;
    if (k == 0)
        return true;
    const std::uint32_t p = space_.p();
    auto * mult = &multiples_[static_cast<std::size_t>(depth) * (p - 1)];
    mult[0] = code;
    for (std::uint32_t c = 2; c < p; ++c)
        mult[c - 1] = space_.scale(code, c);

    // Every vector code + sum_{j in S} a_j f(order[j]) with |S| <= k - 1 and
    // all a_j nonzero joins the forbidden set.
    bool alive = true;
    auto recurse = [&](auto && self, int start, int remaining, std::uint32_t current) -> void {
        if (! alive)
            return;
        alive = mark(0, space_.orbit_of(current));
        if (remaining == 0)
            return;
        for (int j = start; j < depth; ++j) {
            const auto * mj = &multiples_[static_cast<std::size_t>(j) * (p - 1)];
            for (std::uint32_t c = 0; c + 1 < p; ++c)
                self(self, j + 1, remaining - 1, space_.add(current, mj[c]));
        }
    };
    recurse(recurse, 0, k - 1, code);
    return alive || depth + 1 == n_;
}

bool SearchKernel::propagate_general(int vertex, std::uint32_t code)
{
    const std::uint32_t p = space_.p();
    bool alive = true;
    for (int f : source_.incident[static_cast<std::size_t>(vertex)]) {
        const auto & facet = source_.facets[static_cast<std::size_t>(f)];
        unassigned_scratch_.clear();
        span_scratch_.assign(1, 0);
        for (int u : facet) {
            if (u == vertex)
                continue;
            if (! assigned_[static_cast<std::size_t>(u)]) {
                unassigned_scratch_.push_back(u);
                continue;
            }
            auto base = span_scratch_.size();
            auto y = image_[static_cast<std::size_t>(u)];
            for (std::uint32_t c = 1; c < p; ++c) {
                auto cy = space_.scale(y, c);
                for (std::size_t i = 0; i < base; ++i)
                    span_scratch_.push_back(space_.add(span_scratch_[i], cy));
            }
        }
        if (unassigned_scratch_.empty())
            continue;
        for (auto y : span_scratch_) {
            auto orbit = space_.orbit_of(space_.add(code, y));
            for (int u : unassigned_scratch_)
                alive = mark(u, orbit) && alive;
        }
    }
    return alive;
}

bool SearchKernel::push(int depth, std::uint32_t code)
{
    const int vertex = source_.order[static_cast<std::size_t>(depth)];
    auto d = static_cast<std::size_t>(depth);
    saved_span_dim_[d] = span_dim_;
    saved_non_basis_[d] = non_basis_seen_;
    log_start_[d] = log_.size();

    if (flags_.basis_pinning && span_dim_ < space_.r() && code == space_.power(span_dim_))
        ++span_dim_;
    else
        non_basis_seen_ = true;

    image_[static_cast<std::size_t>(vertex)] = code;
    assigned_[static_cast<std::size_t>(vertex)] = 1;

    return source_.is_skeleton ? propagate_skeleton(depth, code) : propagate_general(vertex, code);
}

void SearchKernel::pop(int depth)
{
    const int vertex = source_.order[static_cast<std::size_t>(depth)];
    auto d = static_cast<std::size_t>(depth);
    for (auto i = log_.size(); i > log_start_[d]; --i) {
        auto entry = log_[i - 1];
        auto row = static_cast<std::size_t>(entry >> 32);
        auto orbit = static_cast<std::uint32_t>(entry & 0xffffffffu);
        if (--forbid_[row * orbit_count_ + orbit] == 0)
            --forbidden_total_[row];
    }
    log_.resize(log_start_[d]);
    assigned_[static_cast<std::size_t>(vertex)] = 0;
    span_dim_ = saved_span_dim_[d];
    non_basis_seen_ = saved_non_basis_[d];
}

void SearchKernel::flush_nodes()
{
    control_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
}

bool SearchKernel::tick()
{
    if ((++local_nodes_ & 0xfff) != 0)
        return true;
    auto total = control_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total >= control_.max_nodes || (control_.has_deadline && std::chrono::steady_clock::now() >= control_.deadline))
        control_.budget_hit.store(true);
    return ! control_.budget_hit.load(std::memory_order_relaxed) &&
        control_.best_task.load(std::memory_order_relaxed) >= task_index_;
}

DfsResult SearchKernel::run(int depth, std::size_t task_index)
{
    task_index_ = task_index;
    if (depth == n_) {
        witness_ = image_;
        return DfsResult::Found;
    }
    // Small budgets are checked exactly; larger ones every 4096 nodes.
    DfsResult result = DfsResult::Exhausted;
    for_each_candidate(depth, [&](std::uint32_t code) {
        if (control_.max_nodes < 4096 &&
            control_.nodes.load(std::memory_order_relaxed) + local_nodes_ >= control_.max_nodes) {
            control_.budget_hit.store(true);
            result = DfsResult::Aborted;
            return false;
        }
        if (! tick()) {
            result = DfsResult::Aborted;
            return false;
        }
        bool alive = push(depth, code);
        DfsResult sub = alive ? run(depth + 1, task_index) : DfsResult::Exhausted;
        pop(depth);
        if (sub != DfsResult::Exhausted) {
            result = sub;
            return false;
        }
        return true;
    });
    return result;
}

} // namespace modp::detail
