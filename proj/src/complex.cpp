#include <modp/complex.hpp>
#include <modp/errors.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace modp {

std::uint64_t checked_power(std::uint64_t base, int exponent)
{
    if (exponent < 0)
        throw DomainError("negative exponent");
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw BudgetError("integer power overflows 64 bits");
        out *= base;
    }
    return out;
}

ComplexDescriptor ComplexDescriptor::explicit_complex(int vertex_count, std::vector<std::vector<int>> maximal_simplices)
{
    if (vertex_count < 0)
        throw DomainError("negative vertex count");
    std::vector<char> covered(static_cast<std::size_t>(vertex_count), 0);
    for (auto & s : maximal_simplices) {
        if (s.empty())
            throw DomainError("empty maximal simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw DomainError("maximal simplex repeats a vertex");
        if (s.front() < 0 || s.back() >= vertex_count)
            throw DomainError("maximal simplex vertex out of range [0, " + std::to_string(vertex_count) + ")");
        for (int v : s)
            covered[static_cast<std::size_t>(v)] = 1;
    }
    std::sort(maximal_simplices.begin(), maximal_simplices.end());
    for (std::size_t a = 0; a < maximal_simplices.size(); ++a)
        for (std::size_t b = 0; b < maximal_simplices.size(); ++b)
            if (a != b && std::includes(maximal_simplices[b].begin(), maximal_simplices[b].end(),
                              maximal_simplices[a].begin(), maximal_simplices[a].end()))
                throw DomainError("a maximal simplex is contained in another");
    for (int v = 0; v < vertex_count; ++v)
        if (! covered[static_cast<std::size_t>(v)])
            maximal_simplices.push_back({v});
    std::sort(maximal_simplices.begin(), maximal_simplices.end());
    return ComplexDescriptor{ExplicitComplex{vertex_count, std::move(maximal_simplices)}};
}

ComplexDescriptor ComplexDescriptor::skeleton(int m, int k)
{
    if (m < 0 || k < 0 || k > m)
        throw DomainError("skeleton requires 0 <= k <= m (got m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
    return ComplexDescriptor{SkeletonComplex{m, k}};
}

ComplexDescriptor ComplexDescriptor::universal(Prime p, int n)
{
    if (n < 1)
        throw DomainError("universal complex requires n >= 1");
    return ComplexDescriptor{UniversalComplex{p, n}};
}

int ComplexDescriptor::vertex_count() const
{
    if (auto s = as_skeleton())
        return s->m + 1;
    if (auto e = as_explicit())
        return e->vertex_count;
    auto u = as_universal();
    auto size = checked_power(u->p.value(), u->n);
    if (size > kDefaultEnumerationGuard)
        throw BudgetError("universal complex has too many vertices to index");
    return static_cast<int>(size - 1);
}

int ComplexDescriptor::dimension() const
{
    if (auto s = as_skeleton())
        return s->k;
    if (auto u = as_universal())
        return u->n - 1;
    int d = -1;
    for (const auto & f : as_explicit()->maximal_simplices)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::string ComplexDescriptor::canonical_string() const
{
    if (auto s = as_skeleton())
        return "skeleton(" + std::to_string(s->m) + "," + std::to_string(s->k) + ")";
    if (auto u = as_universal())
        return "universal(" + std::to_string(u->p.value()) + "," + std::to_string(u->n) + ")";
    const auto & e = *as_explicit();
    std::string out = "explicit(" + std::to_string(e.vertex_count) + ";";
    for (std::size_t i = 0; i < e.maximal_simplices.size(); ++i) {
        out += i ? "|" : "";
        for (std::size_t j = 0; j < e.maximal_simplices[i].size(); ++j)
            out += (j ? "," : "") + std::to_string(e.maximal_simplices[i][j]);
    }
    return out + ")";
}

namespace {

void require_vectors(const UniversalComplex & u, std::span<const FpVector> vectors)
{
    for (const auto & v : vectors) {
        if (v.modulus() != u.p)
            throw ShapeError("vector modulus differs from complex modulus");
        if (v.size() != static_cast<std::size_t>(u.n))
            throw ShapeError("vector length " + std::to_string(v.size()) + " != n = " + std::to_string(u.n));
        if (v.is_zero())
            throw DomainError("the zero vector is not a vertex of X(F_p^n)");
    }
}

FpVector vector_at_index(Prime p, int n, std::uint64_t index)
{
    // Lexicographic rank with the first coordinate most significant.
    FpVector v{p, static_cast<std::size_t>(n)};
    for (int i = n - 1; i >= 0; --i) {
        v.set(static_cast<std::size_t>(i), static_cast<std::int64_t>(index % p.value()));
        index /= p.value();
    }
    return v;
}

} // namespace

bool is_simplex(const UniversalComplex & complex, std::span<const FpVector> vectors)
{
    require_vectors(complex, vectors);
    if (vectors.size() > static_cast<std::size_t>(complex.n))
        return false;
    return rank(FpMatrix::from_columns(complex.p, static_cast<std::size_t>(complex.n), vectors)) == vectors.size();
}

bool is_simplex(const ComplexDescriptor & complex, std::span<const int> vertices)
{
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    int count = complex.vertex_count();
    for (int v : sorted)
        if (v < 0 || v >= count)
            throw DomainError("vertex " + std::to_string(v) + " out of range");

    if (auto s = complex.as_skeleton())
        return distinct && static_cast<int>(sorted.size()) <= s->k + 1;
    if (auto e = complex.as_explicit()) {
        if (! distinct)
            return false;
        return std::any_of(e->maximal_simplices.begin(), e->maximal_simplices.end(), [&](const auto & f) {
            return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
        });
    }
    const auto & u = *complex.as_universal();
    if (! distinct)
        return false;
    std::vector<FpVector> vectors;
    vectors.reserve(sorted.size());
    for (int v : sorted)
        vectors.push_back(vector_at_index(u.p, u.n, static_cast<std::uint64_t>(v) + 1));
    return is_simplex(u, vectors);
}

std::vector<FpVector> enumerate_vertices(Prime p, int n, std::uint64_t guard)
{
    if (n < 1)
        throw DomainError("enumerate_vertices requires n >= 1");
    std::uint64_t size = 0;
    try {
        size = checked_power(p.value(), n);
    } catch (const BudgetError &) {
        throw BudgetError("p^n overflows; refusing to enumerate");
    }
    if (size > guard)
        throw BudgetError("p^n = " + std::to_string(size) + " exceeds the enumeration guard " + std::to_string(guard));
    std::vector<FpVector> out;
    out.reserve(size - 1);
    for (std::uint64_t i = 1; i < size; ++i)
        out.push_back(vector_at_index(p, n, i));
    return out;
}

std::vector<FpVector> enumerate_orbit_representatives(Prime p, int n, std::uint64_t guard)
{
    auto all = enumerate_vertices(p, n, guard);
    std::vector<FpVector> out;
    for (auto & v : all)
        if (v[v.leading_index()] == 1)
            out.push_back(std::move(v));
    return out;
}

std::size_t vertex_index(const FpVector & v)
{
    if (v.is_zero())
        throw DomainError("the zero vector is not a vertex");
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        index = index * v.modulus().value() + v[i];
    return static_cast<std::size_t>(index - 1);
}

BigInt count_minimal_nonsimplices(Prime p, int n, int j)
{
    if (n < 2)
        throw DomainError("minimal nonsimplex counts require n >= 2");
    if (j < 1 || j > n)
        throw DomainError("j must satisfy 1 <= j <= n");
    BigInt q = boost::multiprecision::pow(BigInt(p.value()), static_cast<unsigned>(n));
    if (j == 1) {
        BigInt numerator = (q - 1) * (BigInt(p.value()) - 2);
        return numerator / 2;
    }
    BigInt numerator = 1;
    BigInt power_of_p = 1;
    for (int t = 0; t < j; ++t) {
        numerator *= q - power_of_p;
        power_of_p *= p.value();
    }
    numerator *= boost::multiprecision::pow(BigInt(p.value() - 1), static_cast<unsigned>(j));
    BigInt factorial = 1;
    for (int t = 2; t <= j + 1; ++t)
        factorial *= t;
    if (numerator % factorial != 0)
        throw std::logic_error("minimal nonsimplex count is not an integer");
    return numerator / factorial;
}

std::vector<std::vector<FpVector>> enumerate_minimal_nonsimplices(Prime p, int n, int j, std::uint64_t vertex_guard)
{
    if (j < 1 || j > n)
        throw DomainError("j must satisfy 1 <= j <= n");
    auto vertices = enumerate_vertices(p, n, vertex_guard + 1);
    UniversalComplex u{p, n};
    const std::size_t size = static_cast<std::size_t>(j) + 1;
    std::vector<std::vector<FpVector>> out;
    if (vertices.size() < size)
        return out;

    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<FpVector> chosen;
    std::vector<FpVector> face;
    while (true) {
        chosen.clear();
        for (auto i : pick)
            chosen.push_back(vertices[i]);
        if (! is_simplex(u, chosen)) {
            bool minimal = true;
            for (std::size_t drop = 0; drop < size && minimal; ++drop) {
                face.clear();
                for (std::size_t t = 0; t < size; ++t)
                    if (t != drop)
                        face.push_back(chosen[t]);
                minimal = is_simplex(u, face);
            }
            if (minimal)
                out.push_back(chosen);
        }
        // Next combination in lexicographic order.
        std::size_t t = size;
        while (t > 0 && pick[t - 1] == vertices.size() - size + t - 1)
            --t;
        if (t == 0)
            break;
        ++pick[t - 1];
        for (std::size_t s = t; s < size; ++s)
            pick[s] = pick[s - 1] + 1;
    }
    return out;
}

std::uint64_t universal_degree(Prime p, int n)
{
    if (n < 1)
        throw DomainError("universal_degree requires n >= 1");
    return checked_power(p.value(), n) - p.value();
}

SkeletonSimplices::SkeletonSimplices(int m, int k, std::optional<int> containing, std::optional<int> exact_size) :
    m_(m), k_(k), containing_(containing), exact_size_(exact_size)
{
    if (m < 0 || k < 0 || k > m)
        throw DomainError("skeleton requires 0 <= k <= m");
    if (containing && (*containing < 0 || *containing > m))
        throw DomainError("vertex out of range");
}

SkeletonSimplices::iterator::iterator(const SkeletonSimplices * owner, bool done) : owner_(owner), done_(done)
{
    if (done_)
        return;
    int first = owner_->exact_size_.value_or(1);
    done_ = ! start_size(first);
}

bool SkeletonSimplices::iterator::accept() const
{
    if (! owner_->containing_)
        return true;
    return std::binary_search(current_.begin(), current_.end(), *owner_->containing_);
}

bool SkeletonSimplices::iterator::start_size(int size)
{
    int last = owner_->exact_size_.value_or(owner_->k_ + 1);
    for (; size <= last && size <= owner_->m_ + 1; ++size) {
        if (size < 1)
            continue;
        size_ = size;
        current_.resize(static_cast<std::size_t>(size));
        std::iota(current_.begin(), current_.end(), 0);
        if (accept())
            return true;
        while (advance_combination())
            if (accept())
                return true;
    }
    return false;
}

bool SkeletonSimplices::iterator::advance_combination()
{
    const int n = owner_->m_ + 1;
    int t = size_;
    while (t > 0 && current_[static_cast<std::size_t>(t - 1)] == n - size_ + t - 1)
        --t;
    if (t == 0)
        return false;
    ++current_[static_cast<std::size_t>(t - 1)];
    for (int s = t; s < size_; ++s)
        current_[static_cast<std::size_t>(s)] = current_[static_cast<std::size_t>(s - 1)] + 1;
    return true;
}

SkeletonSimplices::iterator & SkeletonSimplices::iterator::operator++()
{
    while (advance_combination())
        if (accept())
            return *this;
    done_ = ! start_size(size_ + 1);
    return *this;
}

namespace {

// All bases of F_p^n as sorted index lists into enumerate_vertices(p, n).
std::vector<std::vector<int>> universal_bases(const UniversalComplex & u, std::uint64_t facet_guard)
{
    auto vertices = enumerate_vertices(u.p, u.n);
    const int n = u.n;
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::vector<FpVector> columns;

    auto recurse = [&](auto && self, int start) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            if (out.size() >= facet_guard)
                throw BudgetError("universal complex has more than " + std::to_string(facet_guard) + " facets");
            out.push_back(chosen);
            return;
        }
        for (int v = start; v < static_cast<int>(vertices.size()); ++v) {
            columns.push_back(vertices[static_cast<std::size_t>(v)]);
            if (rank(FpMatrix::from_columns(u.p, static_cast<std::size_t>(n), columns)) == columns.size()) {
                chosen.push_back(v);
                self(self, v + 1);
                chosen.pop_back();
            }
            columns.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace

std::vector<std::vector<int>> maximal_simplices(const ComplexDescriptor & complex, std::uint64_t facet_guard)
{
    if (auto e = complex.as_explicit())
        return e->maximal_simplices;
    if (auto u = complex.as_universal())
        return universal_bases(*u, facet_guard);
    const auto & s = *complex.as_skeleton();
    std::vector<std::vector<int>> out;
    for (const auto & f : SkeletonSimplices{s.m, s.k, std::nullopt, s.k + 1}) {
        if (out.size() >= facet_guard)
            throw BudgetError("skeleton has too many facets");
        out.push_back(f);
    }
    return out;
}

} // namespace modp
