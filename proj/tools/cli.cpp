#include "cli.hpp"

#include "cache.hpp"

#include <modp/acceptance.hpp>
#include <modp/errors.hpp>
#include <modp/invariants.hpp>
#include <modp/io.hpp>
#include <modp/search.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

namespace modp::cli {

namespace {

struct BudgetFlags {
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;
    unsigned threads = 1;

    void attach(CLI::App & app)
    {
        app.add_option("--budget-nodes", nodes, "Stop after this many search nodes");
        app.add_option("--budget-seconds", seconds, "Stop after this many seconds");
        app.add_option("--threads", threads, "Search worker threads")->check(CLI::Range(1u, 1024u));
    }

    SearchBudget budget() const
    {
        SearchBudget b;
        b.max_nodes = nodes;
        b.max_seconds = seconds;
        b.worker_count = threads;
        return b;
    }
};

struct CacheFlags {
    bool disabled = false;
    std::string path;

    void attach(CLI::App & app)
    {
        app.add_flag("--no-cache", disabled, "Neither read nor write the result cache");
        app.add_option("--cache", path, "Cache file (default: $MODP_CACHE or the user data directory)");
    }

    std::unique_ptr<ResultCache> open(std::ostream & err) const
    {
        if (disabled)
            return nullptr;
        auto resolved = resolve_cache_path(path);
        if (resolved.empty())
            return nullptr;
        return std::make_unique<ResultCache>(resolved, err);
    }
};

Prime parse_prime(std::uint32_t value, const char * flag)
{
    try {
        return Prime(value);
    } catch (const DomainError &) {
        throw CLI::ValidationError(flag, std::to_string(value) + " is not a prime");
    }
}

void write_witness(const std::string & path, const std::optional<VertexMap> & witness, std::ostream & err)
{
    if (path.empty())
        return;
    if (! witness) {
        err << "no witness to write\n";
        return;
    }
    write_text_file_atomic(path, vertex_map_to_json(*witness).dump(1) + "\n");
    err << "witness written to " << path << "\n";
}

// Cached lookup around an invariant computation; stdout is the same either way.
template <typename Compute>
InvariantResult cached(ResultCache * cache, const ComplexDescriptor & complex, Prime p, Compute && compute,
    std::ostream & err)
{
    if (cache)
        if (auto hit = cache->lookup(complex, p)) {
            err << "(from cache " << cache->path().string() << ")\n";
            return *hit;
        }
    auto result = compute();
    if (cache)
        cache->store(result);
    return result;
}

int emit_invariant(const InvariantResult & result, const std::string & format, std::ostream & out)
{
    if (format == "json")
        out << invariant_to_json(result).dump(1) << "\n";
    else
        out << result.summary() << "\n";
    return result.exact() ? kExitOk : kExitUndecided;
}

std::string cell_text(const InvariantResult & r)
{
    if (r.exact())
        return std::to_string(r.lower);
    return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

int emit_table(Prime p, int min_m, int max_m, const std::vector<std::vector<InvariantResult>> & rows,
    const std::string & format, std::ostream & out)
{
    bool all_exact = true;
    if (format == "csv") {
        out << "p,m,k,lower,upper,exact\n";
        for (const auto & row : rows)
            for (const auto & r : row) {
                const auto * s = r.complex.as_skeleton();
                out << p.value() << "," << s->m << "," << s->k << "," << r.lower << "," << r.upper << ","
                    << (r.exact() ? "exact" : "interval") << "\n";
                all_exact = all_exact && r.exact();
            }
    } else if (format == "json") {
        Json cells = Json::array();
        for (const auto & row : rows)
            for (const auto & r : row) {
                const auto * s = r.complex.as_skeleton();
                Json c{{"m", s->m}, {"k", s->k}, {"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}};
                cells.push_back(std::move(c));
                all_exact = all_exact && r.exact();
            }
        out << Json{{"p", p.value()}, {"cells", cells}}.dump(1) << "\n";
    } else {
        out << "| m \\ k |";
        for (int k = 0; k <= max_m; ++k)
            out << " " << k << " |";
        out << "\n|---|";
        for (int k = 0; k <= max_m; ++k)
            out << "---|";
        out << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << "| " << min_m + static_cast<int>(i) << " |";
            for (int k = 0; k <= max_m; ++k) {
                if (k < static_cast<int>(rows[i].size())) {
                    out << " " << cell_text(rows[i][static_cast<std::size_t>(k)]) << " |";
                    all_exact = all_exact && rows[i][static_cast<std::size_t>(k)].exact();
                } else {
                    out << "  |";
                }
            }
            out << "\n";
        }
        if (! all_exact)
            out << "\nCells in brackets are intervals left open by the search budget.\n";
    }
    return all_exact ? kExitOk : kExitUndecided;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Mod-p Buchstaber invariants of skeleta and universal complexes", "modp"};
    app.set_version_flag("--version", MODP_VERSION);
    app.require_subcommand(1);
    const std::vector<std::string> formats{"md", "csv", "json"};

    // skeleton
    auto * skeleton = app.add_subcommand("skeleton", "s_p of the k-skeleton of the m-simplex");
    int m = 0;
    int k = 0;
    std::uint32_t p = 0;
    std::string format = "md";
    std::string witness_path;
    BudgetFlags budget;
    CacheFlags cache_flags;
    std::uint64_t seed = 20240611;
    skeleton->add_option("--m", m, "Simplex dimension")->required();
    skeleton->add_option("--k", k, "Skeleton dimension")->required();
    skeleton->add_option("--p", p, "Prime")->required();
    skeleton->add_option("--format", format)->check(CLI::IsMember(formats));
    skeleton->add_option("--witness", witness_path, "Write the witness map as JSON");
    budget.attach(*skeleton);
    cache_flags.attach(*skeleton);

    // table
    auto * table = app.add_subcommand("table", "Triangular table of s_p(skeleton(m,k))");
    int max_m = kTableGuard;
    int min_m = 2;
    bool force = false;
    table->add_option("--p", p, "Prime")->required();
    table->add_option("--max-m", max_m, "Last row");
    table->add_option("--min-m", min_m, "First row")->check(CLI::PositiveNumber);
    table->add_flag("--force", force, "Allow --max-m beyond the default guard");
    table->add_option("--format", format)->check(CLI::IsMember(formats));
    budget.attach(*table);
    cache_flags.attach(*table);

    // search-map
    auto * search = app.add_subcommand("search-map", "Search for a nondegenerate map into X(F_p^r)");
    std::string source_arg;
    int r = 0;
    search->add_option("--source", source_arg, "Complex JSON or path to it")->required();
    search->add_option("--p", p, "Target prime")->required();
    search->add_option("--r", r, "Target dimension")->required();
    search->add_option("--witness", witness_path, "Write the witness map as JSON");
    budget.attach(*search);

    // check-map
    auto * check = app.add_subcommand("check-map", "Check that a vertex map is nondegenerate");
    std::string map_arg;
    check->add_option("--source", source_arg, "Complex JSON or path to it")->required();
    check->add_option("--map", map_arg, "Map JSON or path to it")->required();

    // count
    auto * count = app.add_subcommand("count", "Number of minimal j-nonsimplices of X(F_p^n)");
    int n = 0;
    int j = 0;
    bool brute = false;
    count->add_option("--p", p, "Prime")->required();
    count->add_option("--n", n, "Dimension")->required();
    count->add_option("--j", j, "Nonsimplex dimension")->required();
    count->add_flag("--brute-force", brute, "Also enumerate and compare");

    // universal
    auto * universal = app.add_subcommand("universal", "s_q of X(F_p^n)");
    std::optional<std::uint32_t> q;
    universal->add_option("--p", p, "Prime of the source complex")->required();
    universal->add_option("--n", n, "Dimension of the source complex")->required();
    universal->add_option("--q", q, "Target prime (default: same as --p)");
    universal->add_option("--format", format)->check(CLI::IsMember(formats));
    universal->add_option("--witness", witness_path, "Write the witness map as JSON");
    budget.attach(*universal);
    cache_flags.attach(*universal);

    // verify-paper
    auto * verify = app.add_subcommand("verify-paper", "Run the full verification suite");
    bool skip_slow = false;
    std::vector<int> only;
    verify->add_flag("--skip-slow", skip_slow, "Skip the long nonexistence exhaustions");
    verify->add_option("--seed", seed, "Seed for randomized checks");
    verify->add_option("--threads", budget.threads, "Search worker threads")->check(CLI::Range(1u, 1024u));
    verify->add_option("--only", only, "Run only these criterion ids");
    verify->add_option("--format", format)->check(CLI::IsMember(formats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << MODP_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError & e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (skeleton->parsed()) {
            const Prime prime = parse_prime(p, "--p");
            require_skeleton_args(m, k);
            auto cache = cache_flags.open(err);
            auto result = cached(cache.get(), ComplexDescriptor::skeleton(m, k), prime,
                [&] { return sp_skeleton(m, k, prime, budget.budget()); }, err);
            write_witness(witness_path, result.witness, err);
            return emit_invariant(result, format, out);
        }

        if (table->parsed()) {
            const Prime prime = parse_prime(p, "--p");
            if (max_m > kTableGuard && ! force) {
                err << "--max-m " << max_m << " exceeds the guard " << kTableGuard << "; pass --force to run it\n";
                return kExitUsage;
            }
            if (max_m < min_m) {
                err << "--max-m must be at least --min-m\n";
                return kExitUsage;
            }
            auto cache = cache_flags.open(err);
            std::vector<std::vector<InvariantResult>> rows;
            for (int mm = min_m; mm <= max_m; ++mm) {
                rows.emplace_back();
                for (int kk = 0; kk <= mm; ++kk)
                    rows.back().push_back(cached(cache.get(), ComplexDescriptor::skeleton(mm, kk), prime,
                        [&] { return sp_skeleton(mm, kk, prime, budget.budget()); }, err));
            }
            return emit_table(prime, min_m, max_m, rows, format, out);
        }

        if (search->parsed()) {
            const Prime prime = parse_prime(p, "--p");
            auto source = complex_from_json(load_json_argument(source_arg));
            auto outcome = search_map(source, prime, r, budget.budget());
            out << to_string(outcome.status) << "\n";
            err << "nodes " << outcome.stats.nodes << ", " << std::fixed << std::setprecision(3) << outcome.stats.seconds
                << " s, " << outcome.stats.tasks << " tasks\n";
            write_witness(witness_path, outcome.witness, err);
            switch (outcome.status) {
            case SearchStatus::Found:
                return kExitOk;
            case SearchStatus::ExhaustedNone:
                return kExitNo;
            case SearchStatus::BudgetExceeded:
                return kExitUndecided;
            }
        }

        if (check->parsed()) {
            auto source = complex_from_json(load_json_argument(source_arg));
            auto map = vertex_map_from_json(load_json_argument(map_arg));
            auto report = check_nondegenerate(source, map);
            if (report) {
                out << "nondegenerate\n";
                return kExitOk;
            }
            out << "degenerate: simplex [";
            for (std::size_t i = 0; i < report.violating_simplex.size(); ++i)
                out << (i ? "," : "") << report.violating_simplex[i];
            out << "] has dependent images\n";
            return kExitNo;
        }

        if (count->parsed()) {
            const Prime prime = parse_prime(p, "--p");
            auto value = count_minimal_nonsimplices(prime, n, j);
            out << value.str() << "\n";
            if (brute) {
                auto oracle = enumerate_minimal_nonsimplices(prime, n, j).size();
                bool match = value == BigInt(oracle);
                out << "oracle " << oracle << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
                return match ? kExitOk : kExitNo;
            }
            return kExitOk;
        }

        if (universal->parsed()) {
            const Prime src = parse_prime(p, "--p");
            const Prime target = q ? parse_prime(*q, "--q") : src;
            auto cache = cache_flags.open(err);
            auto result = cached(cache.get(), ComplexDescriptor::universal(src, n), target,
                [&] { return sp_universal(src, n, target, budget.budget()); }, err);
            write_witness(witness_path, result.witness, err);
            return emit_invariant(result, format, out);
        }

        if (verify->parsed()) {
            AcceptanceOptions options;
            options.skip_slow = skip_slow;
            options.threads = budget.threads;
            options.seed = seed;
            options.only = only;
            Json report = Json::array();
            bool all_pass = true;
            auto results = run_acceptance(options, [&](const CriterionResult & c) {
                if (format != "json")
                    out << to_string(c.status) << " " << c.id << " " << c.name << ": " << c.detail << " ["
                        << std::fixed << std::setprecision(1) << c.seconds << " s]\n"
                        << std::flush;
            });
            for (const auto & c : results) {
                all_pass = all_pass && c.status != CriterionStatus::Fail;
                report.push_back({{"id", c.id},
                    {"name", c.name},
                    {"status", to_string(c.status)},
                    {"detail", c.detail},
                    {"seconds", c.seconds}});
            }
            if (format == "json")
                out << report.dump(1) << "\n";
            return all_pass ? kExitOk : kExitNo;
        }
    } catch (const CLI::ValidationError & e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IncompleteMapError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError & e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace modp::cli
