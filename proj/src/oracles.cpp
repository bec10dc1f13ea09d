#include <modp/oracles.hpp>

#include <modp/errors.hpp>

#include <algorithm>

namespace modp::oracle {

namespace {

std::vector<std::vector<int>> all_faces(const ComplexDescriptor & source)
{
    std::vector<std::vector<int>> faces;
    for (const auto & facet : maximal_simplices(source)) {
        const auto size = facet.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < size; ++i)
                if (mask >> i & 1)
                    face.push_back(facet[i]);
            faces.push_back(std::move(face));
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

} // namespace

std::optional<VertexMap> brute_force_map(const ComplexDescriptor & source, Prime p, int r)
{
    const int n = source.vertex_count();
    const auto candidates = enumerate_vertices(p, r);
    const auto faces = all_faces(source);

    // Faces never cross connected components, so each component is searched
    // on its own: the vertices of its largest facet first, then breadth-first.
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
    for (const auto & face : faces)
        if (face.size() == 2) {
            adjacent[static_cast<std::size_t>(face[0])].push_back(face[1]);
            adjacent[static_cast<std::size_t>(face[1])].push_back(face[0]);
        }
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> orders;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] >= 0)
            continue;
        orders.emplace_back();
        auto & order = orders.back();
        const int id = static_cast<int>(orders.size()) - 1;
        component[static_cast<std::size_t>(start)] = id;
        order.push_back(start);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : adjacent[static_cast<std::size_t>(order[i])])
                if (component[static_cast<std::size_t>(w)] < 0) {
                    component[static_cast<std::size_t>(w)] = id;
                    order.push_back(w);
                }
        const std::vector<int> * largest = nullptr;
        for (const auto & face : faces)
            if (component[static_cast<std::size_t>(face[0])] == id && (! largest || face.size() > largest->size()))
                largest = &face;
        if (! largest)
            continue;
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        std::vector<int> members = order;
        order.assign(largest->begin(), largest->end());
        for (int v : order)
            placed[static_cast<std::size_t>(v)] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : adjacent[static_cast<std::size_t>(order[i])])
                if (! placed[static_cast<std::size_t>(w)]) {
                    placed[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
        for (int v : members)
            if (! placed[static_cast<std::size_t>(v)])
                order.push_back(v);
    }

    std::vector<int> position(static_cast<std::size_t>(n), 0);
    for (const auto & order : orders)
        for (std::size_t i = 0; i < order.size(); ++i)
            position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    // Faces grouped by their last vertex in search order: checked once that vertex is set.
    std::vector<std::vector<const std::vector<int> *>> closing(static_cast<std::size_t>(n));
    for (const auto & face : faces) {
        int last = *std::max_element(face.begin(), face.end(), [&](int a, int b) {
            return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
        });
        closing[static_cast<std::size_t>(last)].push_back(&face);
    }

    std::vector<const FpVector *> image(static_cast<std::size_t>(n), nullptr);
    auto consistent = [&](int v) {
        for (const auto * face : closing[static_cast<std::size_t>(v)]) {
            std::vector<FpVector> columns;
            for (int u : *face)
                columns.push_back(*image[static_cast<std::size_t>(u)]);
            if (rank(FpMatrix::from_columns(p, static_cast<std::size_t>(r), columns)) != face->size())
                return false;
        }
        return true;
    };
    for (const auto & order : orders) {
        auto assign = [&](auto && self, std::size_t i) -> bool {
            if (i == order.size())
                return true;
            const int v = order[i];
            for (const auto & c : candidates) {
                image[static_cast<std::size_t>(v)] = &c;
                if (consistent(v) && self(self, i + 1))
                    return true;
            }
            return false;
        };
        if (! assign(assign, 0))
            return std::nullopt;
    }
    VertexMap map{p, r, {}};
    for (int v = 0; v < n; ++v)
        map.assignments.emplace(v, *image[static_cast<std::size_t>(v)]);
    return map;
}

std::optional<Sp2Minimum> minimize_sp2_system(int k, Prime p, int bound)
{
    const int pv = static_cast<int>(p.value());
    std::optional<Sp2Minimum> best;
    for (int x1 = 0; x1 <= bound; ++x1)
        for (int x2 = 0; x2 <= bound; ++x2)
            for (int x11 = 0; x11 <= bound; ++x11) {
                // ceil(x11 / (p - 1)): the most shared coordinates one
                // combination can cancel.
                int cancel = (x11 + pv - 2) / (pv - 1);
                bool ok = x1 + x11 >= k + 1 && x2 + x11 >= k + 1 && x1 + x2 + x11 - cancel >= k;
                if (ok && (! best || x1 + x2 + x11 < best->sum()))
                    best = Sp2Minimum{x1, x2, x11};
            }
    return best;
}

std::optional<int> skeleton_value_by_search(int m, int k, Prime p, const SearchBudget & budget)
{
    require_skeleton_args(m, k);
    const auto source = ComplexDescriptor::skeleton(m, k);
    for (int r = k + 1; r <= m + 1; ++r) {
        auto outcome = search_map(source, p, r, budget);
        if (outcome.status == SearchStatus::Found)
            return m + 1 - r;
        if (outcome.status == SearchStatus::BudgetExceeded)
            return std::nullopt;
    }
    throw Error("internal error: no map even into X(F_p^{m+1})");
}

} // namespace modp::oracle
