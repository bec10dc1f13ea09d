#include <modp/invariants.hpp>

#include <modp/errors.hpp>

#include "invariant_search.hpp"

#include <algorithm>
#include <sstream>

namespace modp {

const char * to_string(Method method) noexcept
{
    switch (method) {
    case Method::ClosedForm:
        return "closed-form";
    case Method::Search:
        return "search";
    case Method::Cached:
        return "cached";
    case Method::Registry:
        return "registry";
    }
    return "?";
}

int InvariantResult::value() const
{
    if (! exact())
        throw PreconditionError("value is only known to lie in [" + std::to_string(lower) + ", " +
            std::to_string(upper) + "]");
    return lower;
}

std::string InvariantResult::summary() const
{
    std::ostringstream os;
    os << "s_" << p.value();
    if (! exact()) {
        os << " in [" << lower << ", " << upper << "] (undecided within budget)";
        return os.str();
    }
    os << " = " << lower;
    if (lower_source.method == upper_source.method)
        os << " (" << to_string(lower_source.method) << ")";
    else
        os << " (" << to_string(lower_source.method) << " + " << to_string(upper_source.method) << ")";
    return os.str();
}

void require_skeleton_args(int m, int k)
{
    if (m < 1)
        throw DomainError("m must be >= 1 (got " + std::to_string(m) + ")");
    if (k < 0 || k > m)
        throw DomainError("k must satisfy 0 <= k <= m (got k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
}

namespace {

void require_sp2_args(int m, int k)
{
    if (m < 2 || k < 0 || k > m)
        throw DomainError("expected m >= 2 and 0 <= k <= m (got m=" + std::to_string(m) + ", k=" + std::to_string(k) +
            ")");
}

int residue(std::int64_t x, std::uint32_t p)
{
    auto r = x % static_cast<std::int64_t>(p);
    return static_cast<int>(r < 0 ? r + p : r);
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

// (p-1) C(m,1) + ... + (p-1)^k C(m,k)
BigInt forbidden_bound(int m, int k, std::uint32_t p)
{
    BigInt sum = 0;
    BigInt scalar = 1;
    for (int j = 1; j <= k; ++j) {
        scalar *= (p - 1);
        sum += scalar * binomial(m, j);
    }
    return sum;
}

FpVector basis_vector(Prime p, int r, int i)
{
    return FpVector::unit(p, static_cast<std::size_t>(r), static_cast<std::size_t>(i));
}

} // namespace

bool sp_geq_two(int m, int k, Prime p)
{
    require_sp2_args(m, k);
    const int pv = static_cast<int>(p.value());
    const int extra = (k % pv == pv - 1) ? 3 : 2;
    return m >= k + k / pv + extra;
}

bool sp_equals_one(int m, int k, Prime p)
{
    require_sp2_args(m, k);
    const int pv = static_cast<int>(p.value());
    if (k > m - 1)
        return false;
    if (k % pv != pv - 1)
        return m - m / (pv + 1) - 1 <= k;
    return pv * ((m - 1) / (pv + 1)) + pv - 1 <= k;
}

bool Sp2Certificate::satisfies(int k, Prime p) const noexcept
{
    const int pv = static_cast<int>(p.value());
    if (x1 < 0 || x2 < 0 || x11 < 0)
        return false;
    return x1 + x11 >= k + 1 && x2 + x11 >= k + 1 && sum() - (x11 + pv - 2) / (pv - 1) >= k && sum() <= M;
}

std::optional<Sp2Certificate> solve_sp2_system(int m, int k, Prime p)
{
    require_sp2_args(m, k);
    const int pv = static_cast<int>(p.value());
    const int alpha = k / pv;
    Sp2Certificate c;
    c.M = m - 1;
    if (k % pv != pv - 1) {
        c.x1 = c.x2 = alpha;
        c.x11 = k + 1 - alpha;
    } else {
        c.x1 = c.x2 = alpha + 1;
        c.x11 = k - alpha;
    }
    if (c.sum() > c.M)
        return std::nullopt;
    return c;
}

VertexMap sp2_witness_map(int m, int k, Prime p, const Sp2Certificate & certificate)
{
    require_sp2_args(m, k);
    if (! certificate.satisfies(k, p) || certificate.M != m - 1)
        throw PreconditionError("certificate does not solve the system for (m, k) = (" + std::to_string(m) + ", " +
            std::to_string(k) + ")");
    const int r = m - 1;
    const int pv = static_cast<int>(p.value());
    VertexMap map{p, r, {}};
    for (int i = 0; i < r; ++i)
        map.assignments.emplace(i, basis_vector(p, r, i));

    FpVector a(p, static_cast<std::size_t>(r));
    FpVector b(p, static_cast<std::size_t>(r));
    int pos = 0;
    for (int i = 0; i < certificate.x1; ++i)
        a.set(static_cast<std::size_t>(pos++), 1);
    // Shared coordinates: b spreads its values over 1..p-1 as evenly as
    // possible so no single combination a - c b cancels too many of them.
    for (int i = 0; i < certificate.x11; ++i, ++pos) {
        a.set(static_cast<std::size_t>(pos), 1);
        b.set(static_cast<std::size_t>(pos), 1 + i % (pv - 1));
    }
    for (int i = 0; i < certificate.x2; ++i)
        b.set(static_cast<std::size_t>(pos++), 1);
    map.assignments.emplace(m - 1, std::move(a));
    map.assignments.emplace(m, std::move(b));
    return map;
}

int greedy_target_dimension(int m, int k, Prime p)
{
    require_skeleton_args(m, k);
    BigInt target = 2 + forbidden_bound(m, k, p.value());
    int n = 0;
    BigInt power = 1;
    while (power < target) {
        power *= p.value();
        ++n;
    }
    return n;
}

int sp_lower_bound_log(int m, int k, Prime p)
{
    return m + 1 - greedy_target_dimension(m, k, p);
}

VertexMap greedy_skeleton_map(int m, int k, Prime p, int n)
{
    require_skeleton_args(m, k);
    const std::uint32_t pv = p.value();
    if (n < 1 || forbidden_bound(m, k, pv) >= BigInt(checked_power(pv, n)) - 1)
        throw PreconditionError("(p-1)C(m,1) + ... + (p-1)^k C(m,k) < p^n - 1 fails for (m,k,p,n) = (" +
            std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(pv) + "," + std::to_string(n) + ")");
    const auto size = checked_power(pv, n);
    if (size > kDefaultEnumerationGuard)
        throw BudgetError("p^n = " + std::to_string(size) + " exceeds the enumeration guard");

    // Codes in lexicographic order: first coordinate most significant.
    auto to_digits = [&](std::uint64_t code) {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code % pv);
            code /= pv;
        }
        return d;
    };
    auto to_code = [&](const std::vector<std::uint32_t> & d) {
        std::uint64_t code = 0;
        for (auto x : d)
            code = code * pv + x;
        return code;
    };

    std::vector<std::vector<std::uint32_t>> images;
    for (int v = 0; v <= std::min(k, m); ++v) {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(n), 0);
        d[static_cast<std::size_t>(v)] = 1;
        images.push_back(std::move(d));
    }

    std::vector<char> forbidden(size, 0);
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(n));
    for (int v = k + 1; v <= m; ++v) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        auto visit = [&](auto && self, int start, int remaining) -> void {
            for (int j = start; j < v; ++j) {
                const auto & img = images[static_cast<std::size_t>(j)];
                for (std::uint32_t c = 1; c < pv; ++c) {
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        acc[i] = (acc[i] + c * img[i]) % pv;
                    forbidden[to_code(acc)] = 1;
                    if (remaining > 1)
                        self(self, j + 1, remaining - 1);
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        acc[i] = (acc[i] + (pv - c) * img[i]) % pv;
                }
            }
        };
        std::fill(acc.begin(), acc.end(), 0);
        if (k > 0)
            visit(visit, 0, k);
        std::uint64_t code = 1;
        while (code < size && forbidden[code])
            ++code;
        if (code == size)
            throw Error("internal error: greedy construction ran out of vectors");
        images.push_back(to_digits(code));
    }

    VertexMap map{p, n, {}};
    for (std::size_t v = 0; v < images.size(); ++v) {
        std::vector<std::int64_t> coords(images[v].begin(), images[v].end());
        map.assignments.emplace(static_cast<int>(v), FpVector(p, std::move(coords)));
    }
    return map;
}

VertexMap vandermonde_skeleton_map(int m, int k, Prime p)
{
    require_skeleton_args(m, k);
    const auto pv = p.value();
    if (m > static_cast<int>(pv) || k > m - 1)
        throw PreconditionError("needs m <= p and k <= m - 1");
    const int r = k + 1;
    VertexMap map{p, r, {}};
    for (int v = 0; v < m; ++v) {
        std::vector<std::int64_t> coords;
        std::int64_t power = 1;
        for (int j = 0; j <= k; ++j) {
            coords.push_back(power);
            power = residue(power * v, pv);
        }
        map.assignments.emplace(v, FpVector(p, std::move(coords)));
    }
    map.assignments.emplace(m, basis_vector(p, r, k));
    return map;
}

VertexMap standard_skeleton_map(int m, Prime p)
{
    if (m < 1)
        throw DomainError("m must be >= 1");
    VertexMap map{p, m, {}};
    for (int v = 0; v < m; ++v)
        map.assignments.emplace(v, basis_vector(p, m, v));
    map.assignments.emplace(m, FpVector(p, std::vector<std::int64_t>(static_cast<std::size_t>(m), 1)));
    return map;
}

VertexMap lift_mod_p(const ComplexDescriptor & source, const VertexMap & map, Prime q)
{
    map.validate();
    VertexMap out{q, map.r, {}};
    for (const auto & [v, image] : map.assignments) {
        std::vector<std::int64_t> coords;
        for (auto c : image.coords()) {
            if (c > 1)
                throw PreconditionError("lift needs 0/1 coordinates; vertex " + std::to_string(v) + " has " +
                    image.to_string());
            coords.push_back(c);
        }
        out.assignments.emplace(v, FpVector(q, std::move(coords)));
    }
    auto report = check_nondegenerate(source, out);
    if (! report)
        throw LiftFailure("lifted map is degenerate mod " + std::to_string(q.value()), report.violating_simplex);
    return out;
}

std::uint64_t min_safe_prime(int m, int s2)
{
    if (s2 < 0 || s2 > m)
        throw DomainError("min_safe_prime needs 0 <= s2 <= m");
    const int r = m - s2;
    BigInt rhs = boost::multiprecision::pow(BigInt(r + 1), static_cast<unsigned>(r + 1));
    BigInt scale = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(r));
    // Start just below the real bound and walk up through the primes.
    BigInt quotient = rhs / scale;
    BigInt root = boost::multiprecision::sqrt(quotient);
    if (root > BigInt(std::numeric_limits<std::uint32_t>::max()))
        throw BudgetError("safe prime for r = " + std::to_string(r) + " is out of range");
    std::uint64_t p = root > 2 ? static_cast<std::uint64_t>(root) - 1 : 2;
    if (! is_prime(p))
        p = next_prime_after(p);
    while (BigInt(p) * p * scale <= rhs)
        p = next_prime_after(p);
    // The walk may have started above a smaller valid prime.
    while (p > 2) {
        std::uint64_t below = p - 1;
        while (below >= 2 && ! is_prime(below))
            --below;
        if (below < 2 || BigInt(below) * below * scale <= rhs)
            break;
        p = below;
    }
    return p;
}

std::vector<MonotonicityViolation> monotonicity_audit(const SkeletonTable & table)
{
    std::vector<MonotonicityViolation> out;
    auto lookup = [&](int m, int k) -> std::optional<int> {
        auto it = table.find({m, k});
        if (it == table.end())
            return std::nullopt;
        return it->second;
    };
    for (const auto & [key, s] : table) {
        const auto [m, k] = key;
        if (auto up = lookup(m + 1, k + 1); up && ! (*up <= s))
            out.push_back({"s(m+1,k+1) <= s(m,k)", m, k, *up, s});
        if (auto next = lookup(m + 1, k)) {
            if (! (s <= *next))
                out.push_back({"s(m,k) <= s(m+1,k)", m, k, s, *next});
            if (! (*next <= s + 1))
                out.push_back({"s(m+1,k) <= s(m,k)+1", m, k, *next, s + 1});
        }
    }
    return out;
}

InvariantResult sp_skeleton(int m, int k, Prime p, const SearchBudget & budget)
{
    require_skeleton_args(m, k);
    const auto source = ComplexDescriptor::skeleton(m, k);
    const int vertices = m + 1;
    InvariantResult result{source, p};
    auto closed = [](std::string rule) { return BoundSource{Method::ClosedForm, std::move(rule)}; };
    auto settle = [&](int value, BoundSource lo, BoundSource hi, std::optional<VertexMap> witness) {
        result.lower = result.upper = value;
        result.lower_source = std::move(lo);
        result.upper_source = std::move(hi);
        result.witness = std::move(witness);
        return result;
    };

    if (k == m) {
        VertexMap identity{p, vertices, {}};
        for (int v = 0; v < vertices; ++v)
            identity.assignments.emplace(v, basis_vector(p, vertices, v));
        return settle(0, closed("full-simplex"), closed("full-simplex"), identity);
    }
    if (m <= static_cast<int>(p.value()))
        return settle(m - k, closed("vandermonde"), closed("dimension"), vandermonde_skeleton_map(m, k, p));
    if (! sp_geq_two(m, k, p))
        return settle(1, closed("standard-map"), closed("sp-equals-one"), standard_skeleton_map(m, p));

    // s >= 2 and s <= m - k; take the better of the two constructions.
    auto certificate = solve_sp2_system(m, k, p);
    if (! certificate)
        throw Error("internal error: no certificate although s_p >= 2");
    result.lower = 2;
    result.lower_source = closed("sp-two-construction");
    result.witness = sp2_witness_map(m, k, p, *certificate);
    const int n = greedy_target_dimension(m, k, p);
    if (vertices - n > result.lower && checked_power(p.value(), n) <= kDefaultEnumerationGuard) {
        result.lower = vertices - n;
        result.lower_source = closed("greedy-construction");
        result.witness = greedy_skeleton_map(m, k, p, n);
    }
    if (! check_nondegenerate(source, *result.witness))
        throw Error("internal error: constructed witness is degenerate");
    result.upper = m - k;
    result.upper_source = closed("dimension");

    detail::descend_by_search(result, source, budget);
    return result;
}

} // namespace modp
