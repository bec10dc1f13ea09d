#include <modp/acceptance.hpp>

#include <modp/errors.hpp>
#include <modp/oracles.hpp>
#include <modp/reference_tables.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace modp {

const char * to_string(CriterionStatus status) noexcept
{
    switch (status) {
    case CriterionStatus::Pass:
        return "PASS";
    case CriterionStatus::Fail:
        return "FAIL";
    case CriterionStatus::Skipped:
        return "SKIPPED";
    case CriterionStatus::SkippedSlow:
        return "SKIPPED-SLOW";
    }
    return "?";
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng & rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Prime pick_prime(Rng & rng, std::initializer_list<std::uint32_t> primes)
{
    std::vector<std::uint32_t> v(primes);
    return Prime(v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))]);
}

FpVector random_vector(Rng & rng, Prime p, int n, bool nonzero)
{
    for (;;) {
        std::vector<std::int64_t> coords;
        for (int i = 0; i < n; ++i)
            coords.push_back(uniform(rng, 0, static_cast<int>(p.value()) - 1));
        FpVector v(p, std::move(coords));
        if (! nonzero || ! v.is_zero())
            return v;
    }
}

FpScalar random_nonzero(Rng & rng, Prime p)
{
    return FpScalar(uniform(rng, 1, static_cast<int>(p.value()) - 1), p);
}

void record(PropertyReport & report, bool ok, const std::string & what)
{
    ++report.cases;
    if (! ok) {
        if (report.failures == 0)
            report.first_failure = what;
        ++report.failures;
    }
}

} // namespace

ComplexDescriptor random_complex(std::uint64_t seed, int vertices, int facets, int max_facet_size)
{
    Rng rng(seed);
    std::vector<std::vector<int>> sets;
    for (int f = 0; f < facets; ++f) {
        int size = uniform(rng, 1, std::min(max_facet_size, vertices));
        std::vector<int> all(static_cast<std::size_t>(vertices));
        for (int v = 0; v < vertices; ++v)
            all[static_cast<std::size_t>(v)] = v;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(size));
        std::sort(all.begin(), all.end());
        sets.push_back(std::move(all));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<int>> maximal;
    for (const auto & s : sets) {
        bool contained = std::any_of(sets.begin(), sets.end(), [&](const auto & t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (! contained)
            maximal.push_back(s);
    }
    return ComplexDescriptor::explicit_complex(vertices, std::move(maximal));
}

PropertyReport property_rank_invariance(std::uint64_t seed, int cases)
{
    Rng rng(seed);
    PropertyReport report;
    for (int c = 0; c < cases; ++c) {
        const Prime p = pick_prime(rng, {2, 3, 5, 7});
        const int rows = uniform(rng, 1, 6);
        const int cols = uniform(rng, 1, 6);
        FpMatrix m(p, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), uniform(rng, 0, static_cast<int>(p.value()) - 1));
        const auto before = rank(m);
        FpMatrix moved = m;
        for (int step = 0; step < 8; ++step) {
            auto a = static_cast<std::size_t>(uniform(rng, 0, rows - 1));
            auto b = static_cast<std::size_t>(uniform(rng, 0, rows - 1));
            switch (uniform(rng, 0, 2)) {
            case 0:
                moved.swap_rows(a, b);
                break;
            case 1:
                moved.scale_row(a, random_nonzero(rng, p));
                break;
            default:
                if (a != b)
                    moved.add_row_multiple(a, b, FpScalar(uniform(rng, 0, static_cast<int>(p.value()) - 1), p));
            }
        }
        bool ok = rank(moved) == before && rank(m.transpose()) == before &&
            before <= static_cast<std::size_t>(std::min(rows, cols));
        record(report, ok, "p=" + std::to_string(p.value()) + " " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    return report;
}

PropertyReport property_downward_closure(std::uint64_t seed, int cases)
{
    Rng rng(seed);
    PropertyReport report;
    for (int c = 0; c < cases; ++c) {
        const Prime p = pick_prime(rng, {2, 3, 5});
        const int n = uniform(rng, 2, 4);
        const UniversalComplex x{p, n};
        const int size = uniform(rng, 1, n + 1);
        std::vector<FpVector> set;
        while (static_cast<int>(set.size()) < size) {
            auto v = random_vector(rng, p, n, true);
            if (std::find(set.begin(), set.end(), v) == set.end())
                set.push_back(v);
        }
        // Bias half the cases towards independent sets so closure is tested.
        if (c % 2 == 0)
            while (! is_simplex(x, set) && set.size() > 1)
                set.pop_back();
        bool ok = true;
        if (is_simplex(x, set)) {
            for (std::size_t drop = 0; drop < set.size(); ++drop) {
                std::vector<FpVector> sub;
                for (std::size_t i = 0; i < set.size(); ++i)
                    if (i != drop)
                        sub.push_back(set[i]);
                ok = ok && (sub.empty() || is_simplex(x, sub));
            }
        }
        record(report, ok, "p=" + std::to_string(p.value()) + " n=" + std::to_string(n));
    }
    return report;
}

PropertyReport property_reweighting(std::uint64_t seed, int cases)
{
    Rng rng(seed);
    PropertyReport report;
    for (int c = 0; c < cases; ++c) {
        const Prime p = pick_prime(rng, {2, 3, 5});
        const int vertices = uniform(rng, 2, 6);
        auto source = random_complex(rng(), vertices, uniform(rng, 1, 6), 3);
        std::optional<VertexMap> witness;
        for (int r = source.dimension() + 1; ! witness && r <= vertices; ++r)
            witness = search_map(source, p, r).witness;
        if (! witness) {
            record(report, false, "no witness found for " + source.canonical_string());
            continue;
        }
        std::map<int, FpScalar> eps;
        for (int v = 0; v < vertices; ++v)
            eps.emplace(v, random_nonzero(rng, p));
        auto moved = apply_scalar_reweighting(*witness, eps);
        record(report, static_cast<bool>(check_nondegenerate(source, moved)),
            source.canonical_string() + " p=" + std::to_string(p.value()));
    }
    return report;
}

PropertyReport property_canonical_idempotence(std::uint64_t seed, int cases)
{
    Rng rng(seed);
    PropertyReport report;
    for (int c = 0; c < cases; ++c) {
        const Prime p = pick_prime(rng, {2, 3, 5, 7});
        const int r = uniform(rng, 1, 5);
        VertexMap map{p, r, {}};
        const int vertices = uniform(rng, 1, 8);
        for (int v = 0; v < vertices; ++v)
            map.assignments.emplace(v, random_vector(rng, p, r, true));
        auto once = canonical_witness(map);
        auto twice = canonical_witness(once);
        bool ok = once == twice;
        for (const auto & [v, image] : once.assignments) {
            ok = ok && image[image.leading_index()] == 1;
            // Same scalar orbit as the original image.
            const auto & original = map.assignments.at(v);
            ok = ok && rank(FpMatrix::from_columns(p, static_cast<std::size_t>(r), std::vector<FpVector>{original, image})) == 1;
        }
        record(report, ok, "p=" + std::to_string(p.value()) + " r=" + std::to_string(r));
    }
    return report;
}

PropertyReport property_reduced_vs_unreduced(std::uint64_t seed, int cases)
{
    Rng rng(seed);
    PropertyReport report;
    for (int c = 0; c < cases; ++c) {
        const Prime p = pick_prime(rng, {2, 3});
        const int r = uniform(rng, 1, 3);
        const int vertices = uniform(rng, 1, 6);
        auto source = random_complex(rng(), vertices, uniform(rng, 1, 7), 4);
        const bool exists = oracle::brute_force_map(source, p, r).has_value();
        bool ok = true;
        std::string detail = source.canonical_string() + " p=" + std::to_string(p.value()) + " r=" + std::to_string(r);
        for (int mask = 0; mask < 8; ++mask) {
            SymmetryFlags flags{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
            auto outcome = search_map(source, p, r, {}, flags);
            bool found = outcome.status == SearchStatus::Found;
            if (found != exists || outcome.status == SearchStatus::BudgetExceeded) {
                ok = false;
                detail += " flags=" + std::to_string(mask);
            }
        }
        record(report, ok, detail);
    }
    return report;
}

namespace {

struct Context {
    const AcceptanceOptions & options;
    // (p, m, k) -> exact value, or -1 if the computation was undecided.
    std::map<std::tuple<int, int, int>, int> computed;

    int cell(int p, int m, int k)
    {
        auto key = std::make_tuple(p, m, k);
        auto it = computed.find(key);
        if (it != computed.end())
            return it->second;
        SearchBudget budget;
        budget.worker_count = options.threads;
        auto result = sp_skeleton(m, k, Prime(static_cast<std::uint32_t>(p)), budget);
        int value = result.exact() ? result.lower : -1;
        computed.emplace(key, value);
        return value;
    }
};

std::string join(const std::vector<std::string> & parts, std::size_t limit = 5)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size() && i < limit; ++i)
        os << (i ? "; " : "") << parts[i];
    if (parts.size() > limit)
        os << "; ... (" << parts.size() << " total)";
    return os.str();
}

void compare_table(Context & ctx, const std::vector<ReferenceCell> & table, int max_m, CriterionResult & out)
{
    int checked = 0;
    std::vector<std::string> mismatches;
    for (const auto & cell : table) {
        if (cell.m > max_m)
            continue;
        ++checked;
        int got = ctx.cell(cell.p, cell.m, cell.k);
        if (got == cell.value)
            continue;
        std::string line = "p=" + std::to_string(cell.p) + " (" + std::to_string(cell.m) + "," +
            std::to_string(cell.k) + ") expected " + std::to_string(cell.value) + " got " +
            (got < 0 ? std::string("interval") : std::to_string(got));
        // A larger expected value claims a map into a smaller target; report what search says there.
        if (got >= 0 && cell.value > got) {
            int r = cell.m + 1 - cell.value;
            auto outcome = search_map(
                ComplexDescriptor::skeleton(cell.m, cell.k), Prime(static_cast<std::uint32_t>(cell.p)), r);
            line += " (search at r=" + std::to_string(r) + ": " + to_string(outcome.status) + ")";
        }
        mismatches.push_back(line);
    }
    out.status = mismatches.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = std::to_string(checked - static_cast<int>(mismatches.size())) + "/" + std::to_string(checked) +
        " cells match";
    if (! mismatches.empty())
        out.detail += ": " + join(mismatches);
}

void criterion_table_mod3(Context & ctx, CriterionResult & out)
{
    compare_table(ctx, reference_mod3_table(), 9, out);
}

void criterion_table_small_primes(Context & ctx, CriterionResult & out)
{
    compare_table(ctx, reference_small_prime_table(), 7, out);
}

void criterion_f24_nonexistence(Context & ctx, CriterionResult & out)
{
    if (ctx.options.skip_slow) {
        out.status = CriterionStatus::Skipped;
        out.detail = "nonexistence exhaustion skipped";
        return;
    }
    SearchBudget budget;
    budget.worker_count = ctx.options.threads;
    auto outcome = search_map(ComplexDescriptor::universal(Prime(2), 4), Prime(3), 4, budget);
    std::ostringstream os;
    os << "X(F_2^4) -> X(F_3^4): " << to_string(outcome.status) << ", " << outcome.stats.nodes << " nodes, "
       << outcome.stats.seconds << " s";
    out.detail = os.str();
    out.status = outcome.status == SearchStatus::ExhaustedNone ? CriterionStatus::Pass : CriterionStatus::Fail;
}

void criterion_constructions(Context & ctx, CriterionResult & out)
{
    std::vector<std::string> failures;
    int checked = 0;

    ++checked;
    if (! check_nondegenerate(ComplexDescriptor::universal(Prime(2), 4), build_f24_to_f35_map()))
        failures.push_back("f24->f35");

    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int m = 1; m <= static_cast<int>(p); ++m)
            for (int k = 0; k <= m - 1; ++k) {
                ++checked;
                auto map = vandermonde_skeleton_map(m, k, Prime(p));
                if (! check_nondegenerate(ComplexDescriptor::skeleton(m, k), map))
                    failures.push_back("vandermonde(" + std::to_string(m) + "," + std::to_string(k) + "," +
                        std::to_string(p) + ")");
            }

    Rng rng(ctx.options.seed);
    int greedy = 0;
    while (greedy < 20) {
        const Prime p = pick_prime(rng, {2, 3, 5, 7});
        const int m = uniform(rng, 1, 10);
        const int k = uniform(rng, 0, m);
        const int n = greedy_target_dimension(m, k, p) + uniform(rng, 0, 1);
        if (checked_power(p.value(), n) > (1u << 16))
            continue;
        ++greedy;
        ++checked;
        auto map = greedy_skeleton_map(m, k, p, n);
        if (! check_nondegenerate(ComplexDescriptor::skeleton(m, k), map))
            failures.push_back("greedy(" + std::to_string(m) + "," + std::to_string(k) + "," +
                std::to_string(p.value()) + "," + std::to_string(n) + ")");
    }
    out.status = failures.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = std::to_string(checked) + " maps checked (seed " + std::to_string(ctx.options.seed) + ")";
    if (! failures.empty())
        out.detail += ", failures: " + join(failures);
}

void criterion_universal(Context & ctx, CriterionResult & out)
{
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        auto result = sp_universal(Prime(p), n, Prime(p));
        int expected = static_cast<int>(checked_power(p, n)) - 1 - n;
        bool ok = result.exact() && result.lower == expected && result.witness &&
            check_nondegenerate(result.complex, *result.witness);
        if (! ok)
            failures.push_back("identity (" + std::to_string(p) + "," + std::to_string(n) + ")");
    }

    const auto f24 = ComplexDescriptor::universal(Prime(2), 4);
    if (! check_nondegenerate(f24, build_f24_to_f35_map()))
        failures.push_back("s_3(X(F_2^4)) witness");
    SearchBudget budget;
    budget.worker_count = ctx.options.threads;
    bool skipped = false;
    if (ctx.options.skip_slow) {
        skipped = true;
        notes.push_back("r=4 exhaustions skipped");
    } else {
        auto result = sp_universal(Prime(2), 4, Prime(3), budget);
        if (! (result.exact() && result.lower == 10 && result.nonexistence_r == 4))
            failures.push_back("s_3(X(F_2^4)) = " + result.summary());
    }

    for (std::uint32_t q : {5u, 7u}) {
        auto result = sp_universal(Prime(2), 4, Prime(q));
        bool ok = result.exact() && result.lower == 11 && result.witness &&
            check_nondegenerate(f24, *result.witness) && result.lower_source.rule == "hadamard-lift";
        if (! ok)
            failures.push_back("s_" + std::to_string(q) + "(X(F_2^4)) = " + result.summary());
    }

    const auto f33 = ComplexDescriptor::universal(Prime(3), 3);
    if (! check_nondegenerate(f33, build_f33_to_f25_map()))
        failures.push_back("s_2(X(F_3^3)) witness");
    bool slow = false;
    if (! ctx.options.skip_slow) {
        SearchBudget slow_budget = budget;
        slow_budget.max_seconds = ctx.options.slow_budget_seconds;
        auto outcome = search_map(f33, Prime(2), 4, slow_budget);
        std::ostringstream os;
        os << "X(F_3^3) -> X(F_2^4): " << to_string(outcome.status) << ", " << outcome.stats.nodes << " nodes";
        notes.push_back(os.str());
        if (outcome.status == SearchStatus::BudgetExceeded)
            slow = true;
        else if (outcome.status != SearchStatus::ExhaustedNone)
            failures.push_back("X(F_3^3) -> X(F_2^4) has a map");
    }

    if (! failures.empty())
        out.status = CriterionStatus::Fail;
    else if (slow)
        out.status = CriterionStatus::SkippedSlow;
    else if (skipped)
        out.status = CriterionStatus::Skipped;
    else
        out.status = CriterionStatus::Pass;
    out.detail = failures.empty() ? "all universal values confirmed" : "failures: " + join(failures);
    if (! notes.empty())
        out.detail += " (" + join(notes) + ")";
}

void criterion_counting(Context &, CriterionResult & out)
{
    std::vector<std::string> failures;
    int checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int n = 2; checked_power(p, n) <= 27; ++n)
            for (int j = 1; j <= n; ++j) {
                ++checked;
                auto formula = count_minimal_nonsimplices(Prime(p), n, j);
                auto brute = enumerate_minimal_nonsimplices(Prime(p), n, j).size();
                if (formula != BigInt(brute))
                    failures.push_back("(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(j) +
                        "): formula " + formula.str() + " vs " + std::to_string(brute));
            }
    out.status = failures.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = std::to_string(checked) + " (p,n,j) triples";
    if (! failures.empty())
        out.detail += ", mismatches: " + join(failures);
}

void criterion_concordance(Context & ctx, CriterionResult & out)
{
    std::vector<std::string> failures;
    int cells = 0;
    SearchBudget budget;
    budget.worker_count = ctx.options.threads;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 2; m <= 7; ++m)
            for (int k = 0; k <= m - 1; ++k) {
                ++cells;
                auto value = oracle::skeleton_value_by_search(m, k, Prime(p), budget);
                const bool one = sp_equals_one(m, k, Prime(p));
                const bool two = sp_geq_two(m, k, Prime(p));
                if (! value || (*value == 1) != one || (*value >= 2) != two)
                    failures.push_back("p=" + std::to_string(p) + " (" + std::to_string(m) + "," + std::to_string(k) +
                        "): search " + (value ? std::to_string(*value) : std::string("undecided")) +
                        ", classification " + (one ? "1" : ">=2"));
            }

    int systems = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int m = 2; m <= 20; ++m)
            for (int k = 0; k <= m; ++k) {
                ++systems;
                auto solved = solve_sp2_system(m, k, Prime(p));
                auto minimum = oracle::minimize_sp2_system(k, Prime(p), m);
                bool fits = minimum && minimum->sum() <= m - 1;
                bool ok = solved.has_value() == fits;
                if (ok && solved)
                    ok = solved->sum() == minimum->sum() && solved->satisfies(k, Prime(p));
                if (! ok)
                    failures.push_back("system p=" + std::to_string(p) + " (" + std::to_string(m) + "," +
                        std::to_string(k) + ")");
            }
    out.status = failures.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = std::to_string(cells) + " classified cells, " + std::to_string(systems) + " systems";
    if (! failures.empty())
        out.detail += ", disagreements: " + join(failures);
}

void criterion_monotonicity(Context & ctx, CriterionResult & out)
{
    std::vector<std::string> failures;
    int tables = 0;
    for (auto [p, max_m] : std::vector<std::pair<int, int>>{{3, 9}, {2, 7}, {5, 7}, {7, 7}}) {
        SkeletonTable table;
        for (int m = 2; m <= max_m; ++m)
            for (int k = 0; k <= m; ++k) {
                int v = ctx.cell(p, m, k);
                if (v >= 0)
                    table[{m, k}] = v;
            }
        ++tables;
        for (const auto & v : monotonicity_audit(table))
            failures.push_back("p=" + std::to_string(p) + " " + v.rule + " at (" + std::to_string(v.m) + "," +
                std::to_string(v.k) + ")");
    }
    // The audit itself must notice an injected fault.
    SkeletonTable corrupted;
    for (const auto & c : reference_mod3_table())
        if (c.m <= 9)
            corrupted[{c.m, c.k}] = c.value;
    corrupted[{9, 0}] += 1;
    auto injected = monotonicity_audit(corrupted).size();
    if (injected != 1)
        failures.push_back("injected fault produced " + std::to_string(injected) + " violations");
    out.status = failures.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = std::to_string(tables) + " tables, 0 violations";
    if (! failures.empty())
        out.detail = join(failures);
}

void criterion_properties(Context & ctx, CriterionResult & out)
{
    const auto seed = ctx.options.seed;
    const int cases = ctx.options.property_cases;
    std::vector<std::pair<std::string, PropertyReport>> reports{
        {"rank", property_rank_invariance(seed, cases)},
        {"closure", property_downward_closure(seed + 1, cases)},
        {"reweighting", property_reweighting(seed + 2, cases)},
        {"canonical", property_canonical_idempotence(seed + 3, cases)},
        {"reduced-vs-unreduced", property_reduced_vs_unreduced(seed + 4, cases)},
    };
    std::vector<std::string> parts;
    bool ok = true;
    for (const auto & [name, r] : reports) {
        parts.push_back(name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases));
        if (r.failures > 0) {
            ok = false;
            parts.back() += " first failure: " + r.first_failure;
        }
    }
    out.status = ok ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.detail = join(parts) + " (seed " + std::to_string(seed) + ")";
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions & options, const CriterionCallback & on_result)
{
    using Fn = void (*)(Context &, CriterionResult &);
    const std::vector<std::tuple<int, const char *, Fn>> criteria{
        {1, "mod-3 skeleton table, m <= 9", criterion_table_mod3},
        {2, "skeleton table for p in {2,3,5,7}, m <= 7", criterion_table_small_primes},
        {3, "no nondegenerate X(F_2^4) -> X(F_3^4)", criterion_f24_nonexistence},
        {4, "constructed maps are nondegenerate", criterion_constructions},
        {5, "universal complex invariants", criterion_universal},
        {6, "minimal nonsimplex counts vs enumeration", criterion_counting},
        {7, "closed classifications vs search", criterion_concordance},
        {8, "monotonicity audit", criterion_monotonicity},
        {9, "property suites", criterion_properties},
    };
    Context ctx{options, {}};
    std::vector<CriterionResult> results;
    for (const auto & [id, name, fn] : criteria) {
        if (! options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        CriterionResult r;
        r.id = id;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(ctx, r);
        } catch (const std::exception & e) {
            r.status = CriterionStatus::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace modp
