#include <modp/search.hpp>

#include <modp/errors.hpp>

#include "search_kernel.hpp"
#include "target_space.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

namespace modp {

void VertexMap::validate() const
{
    if (r < 1)
        throw DomainError("target dimension must be >= 1");
    for (const auto & [v, image] : assignments) {
        if (v < 0)
            throw DomainError("negative source vertex " + std::to_string(v));
        if (image.modulus() != p || image.size() != static_cast<std::size_t>(r))
            throw ShapeError("image of vertex " + std::to_string(v) + " is not in F_" +
                std::to_string(p.value()) + "^" + std::to_string(r));
        if (image.is_zero())
            throw DomainError("image of vertex " + std::to_string(v) + " is zero");
    }
}

const char * to_string(SearchStatus status) noexcept
{
    switch (status) {
    case SearchStatus::Found:
        return "Found";
    case SearchStatus::ExhaustedNone:
        return "ExhaustedNone";
    case SearchStatus::BudgetExceeded:
        return "BudgetExceeded";
    }
    return "?";
}

namespace {

bool independent(const VertexMap & map, const std::vector<int> & face)
{
    if (face.size() > static_cast<std::size_t>(map.r))
        return false;
    std::vector<FpVector> columns;
    for (int v : face)
        columns.push_back(map.assignments.at(v));
    auto m = FpMatrix::from_columns(map.p, static_cast<std::size_t>(map.r), columns);
    return rank(m) == face.size();
}

} // namespace

NondegeneracyReport check_nondegenerate(const ComplexDescriptor & source, const VertexMap & map)
{
    map.validate();
    const int n = source.vertex_count();
    for (int v = 0; v < n; ++v)
        if (! map.assignments.contains(v))
            throw IncompleteMapError("vertex " + std::to_string(v) + " has no image");
    for (const auto & [v, image] : map.assignments)
        if (v >= n)
            throw DomainError("vertex " + std::to_string(v) + " is not in the source complex");

    NondegeneracyReport report;
    auto fail = [&](const std::vector<int> & face) {
        report.nondegenerate = false;
        report.violating_simplex = face;
    };

    if (auto s = source.as_skeleton()) {
        int size = std::min(s->k, s->m) + 1;
        for (const auto & face : SkeletonSimplices(s->m, s->k, std::nullopt, size))
            if (! independent(map, face)) {
                fail(face);
                break;
            }
        return report;
    }
    for (const auto & face : maximal_simplices(source))
        if (! independent(map, face)) {
            fail(face);
            break;
        }
    return report;
}

namespace {

// Indexed prefixes of the search tree. Tasks are numbered in depth-first
// order, so the lowest successful index carries the first witness.
std::vector<std::vector<std::uint32_t>> split_tasks(detail::SearchKernel & kernel, int vertex_count,
    unsigned workers)
{
    std::vector<std::vector<std::uint32_t>> tasks;
    if (vertex_count == 0)
        return {{}};
    for (auto c : kernel.candidates(0))
        tasks.push_back({c});
    if (vertex_count < 2 || tasks.size() >= 4 * static_cast<std::size_t>(workers))
        return tasks;

    std::vector<std::vector<std::uint32_t>> deeper;
    for (const auto & t : tasks) {
        if (kernel.push(0, t[0]))
            for (auto c : kernel.candidates(1))
                deeper.push_back({t[0], c});
        kernel.pop(0);
    }
    return deeper;
}

} // namespace

SearchOutcome search_map(const ComplexDescriptor & source, Prime p, int r, const SearchBudget & budget,
    const SymmetryFlags & symmetry)
{
    if (r < 1)
        throw DomainError("target dimension r must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome outcome;
    auto finish = [&](SearchStatus status) {
        outcome.status = status;
        outcome.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return outcome;
    };

    // A face with more than r vertices cannot map to an independent set.
    if (source.dimension() + 1 > r)
        return finish(SearchStatus::ExhaustedNone);

    const detail::TargetSpace space(p, r);
    const auto model = detail::SourceModel::from(source);

    detail::SearchControl control;
    if (budget.max_nodes)
        control.max_nodes = *budget.max_nodes;
    if (budget.max_seconds) {
        control.has_deadline = true;
        control.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                       std::chrono::duration<double>(*budget.max_seconds));
    }

    const unsigned workers = std::max(1u, budget.worker_count);
    std::vector<std::vector<std::uint32_t>> tasks;
    if (workers == 1) {
        tasks.push_back({});
    } else {
        detail::SearchKernel splitter(model, space, symmetry, control);
        tasks = split_tasks(splitter, model.vertex_count, workers);
    }
    outcome.stats.tasks = tasks.size();

    std::mutex mutex;
    std::vector<std::uint32_t> best_witness;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        detail::SearchKernel kernel(model, space, symmetry, control);
        for (;;) {
            auto index = next.fetch_add(1);
            if (index >= tasks.size() || control.budget_hit.load() || control.best_task.load() < index)
                break;
            const auto & prefix = tasks[index];
            int depth = 0;
            bool alive = true;
            for (; depth < static_cast<int>(prefix.size()) && alive; ++depth)
                alive = kernel.push(depth, prefix[static_cast<std::size_t>(depth)]);
            auto result = alive ? kernel.run(depth, index) : detail::DfsResult::Exhausted;
            for (int d = depth - 1; d >= 0; --d)
                kernel.pop(d);
            if (result == detail::DfsResult::Found) {
                std::lock_guard lock(mutex);
                if (index < control.best_task.load()) {
                    control.best_task.store(index);
                    best_witness = kernel.witness();
                }
            }
        }
        kernel.flush_nodes();
    };

    if (workers == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(workers, tasks.size()); ++i)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    outcome.stats.nodes = control.nodes.load();

    if (control.best_task.load() != std::numeric_limits<std::size_t>::max()) {
        // An earlier task might have been cut off by the budget before it
        // could finish; the witness is still valid, only maybe not the first.
        VertexMap map{p, r, {}};
        for (int v = 0; v < model.vertex_count; ++v)
            map.assignments.emplace(v, space.to_vector(best_witness[static_cast<std::size_t>(v)]));
        auto report = check_nondegenerate(source, map);
        if (! report)
            throw Error("internal error: search produced a degenerate map");
        outcome.witness = std::move(map);
        return finish(SearchStatus::Found);
    }
    return finish(control.budget_hit.load() ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone);
}

VertexMap apply_scalar_reweighting(const VertexMap & map, const std::map<int, FpScalar> & epsilons)
{
    VertexMap out = map;
    for (const auto & [v, eps] : epsilons) {
        if (eps.modulus() != map.p)
            throw ShapeError("scalar modulus does not match the map");
        if (eps.is_zero())
            throw DomainError("reweighting scalar for vertex " + std::to_string(v) + " is zero");
        auto it = out.assignments.find(v);
        if (it != out.assignments.end())
            it->second = it->second * eps;
    }
    return out;
}

VertexMap canonical_witness(const VertexMap & map)
{
    VertexMap out = map;
    for (auto & [v, image] : out.assignments) {
        auto lead = image.leading_index();
        if (lead == image.size())
            continue;
        image = image * scalar_inverse(FpScalar(image[lead], map.p));
    }
    return out;
}

} // namespace modp
