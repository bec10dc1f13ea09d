#include "cache.hpp"
#include "cli.hpp"

#include <modp/invariants.hpp>
#include <modp/io.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace modp;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
            ("modp_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
        cache_ = (dir_ / "cache.json").string();
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::filesystem::path dir_;
    std::string cache_;
};

} // namespace

TEST_F(CliTest, SkeletonExamples)
{
    auto a = run({"skeleton", "--m", "6", "--k", "3", "--p", "3", "--no-cache"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, "s_3 = 2 (closed-form + search)\n");

    auto b = run({"skeleton", "--m", "2", "--k", "2", "--p", "7", "--no-cache"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out.rfind("s_7 = 0", 0), 0u);

    auto c = run({"skeleton", "--m", "9", "--k", "2", "--p", "3", "--budget-nodes", "1", "--no-cache"});
    EXPECT_EQ(c.code, 3);
    EXPECT_NE(c.out.find("undecided within budget"), std::string::npos);
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(run({"skeleton", "--m", "3", "--k", "5", "--p", "3", "--no-cache"}).code, 2);
    EXPECT_EQ(run({"skeleton", "--m", "3", "--k", "1", "--p", "4", "--no-cache"}).code, 2);
    EXPECT_EQ(run({"skeleton", "--m", "3"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"table", "--p", "3", "--max-m", "10", "--no-cache"}).code, 2);
}

TEST_F(CliTest, TableRowsAndDeterminism)
{
    auto a = run({"table", "--p", "5", "--max-m", "4", "--no-cache"});
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("| 4 | 4 | 3 | 2 | 1 | 0 |"), std::string::npos) << a.out;
    auto b = run({"table", "--p", "5", "--max-m", "4", "--no-cache"});
    EXPECT_EQ(a.out, b.out);

    auto csv = run({"table", "--p", "3", "--max-m", "3", "--format", "csv", "--no-cache"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_NE(csv.out.find("3,3,1,2,2,exact"), std::string::npos) << csv.out;

    auto json = run({"table", "--p", "2", "--max-m", "3", "--format", "json", "--no-cache"});
    auto parsed = Json::parse(json.out);
    EXPECT_EQ(parsed.at("cells").size(), 3u + 4u);
}

TEST_F(CliTest, TableIntervalExitsThree)
{
    auto r = run({"table", "--p", "3", "--min-m", "9", "--max-m", "9", "--budget-nodes", "1", "--no-cache"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("["), std::string::npos);
}

TEST_F(CliTest, SearchMapExitCodes)
{
    std::string src = R"({"universal": {"p": 2, "n": 4}})";
    EXPECT_EQ(run({"search-map", "--source", src, "--p", "3", "--r", "4"}).code, 1);
    auto witness = (dir_ / "w.json").string();
    auto found = run({"search-map", "--source", src, "--p", "3", "--r", "5", "--witness", witness});
    EXPECT_EQ(found.code, 0);
    EXPECT_NE(found.err.find("nodes"), std::string::npos);
    EXPECT_EQ(run({"check-map", "--source", src, "--map", witness}).code, 0);

    EXPECT_EQ(run({"search-map", "--source", R"({"skeleton": {"m": 3, "k": 3}})", "--p", "2", "--r", "3"}).code, 1);
    EXPECT_EQ(run({"search-map", "--source", src, "--p", "3", "--r", "4", "--budget-nodes", "5"}).code, 3);
    EXPECT_EQ(run({"search-map", "--source", "{broken", "--p", "3", "--r", "4"}).code, 2);
}

TEST_F(CliTest, CheckMapExamples)
{
    auto f24 = (dir_ / "f24.json").string();
    write_text_file_atomic(f24, vertex_map_to_json(build_f24_to_f35_map()).dump());
    EXPECT_EQ(run({"check-map", "--source", R"({"universal": {"p": 2, "n": 4}})", "--map", f24}).code, 0);

    std::string flat = R"({"p": 2, "r": 2, "assignments": {"0": [1, 0], "1": [0, 1], "2": [1, 1]}})";
    auto bad = run({"check-map", "--source", R"({"skeleton": {"m": 2, "k": 2}})", "--map", flat});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("[0,1,2]"), std::string::npos);

    auto v = (dir_ / "v.json").string();
    write_text_file_atomic(v, vertex_map_to_json(vandermonde_skeleton_map(5, 2, Prime(5))).dump());
    EXPECT_EQ(run({"check-map", "--source", R"({"skeleton": {"m": 5, "k": 2}})", "--map", v}).code, 0);

    std::string partial = R"({"p": 2, "r": 2, "assignments": {"0": [1, 0]}})";
    EXPECT_EQ(run({"check-map", "--source", R"({"skeleton": {"m": 2, "k": 1}})", "--map", partial}).code, 2);
}

TEST_F(CliTest, CountExamples)
{
    EXPECT_EQ(run({"count", "--p", "3", "--n", "2", "--j", "1"}).out, "4\n");
    EXPECT_EQ(run({"count", "--p", "2", "--n", "5", "--j", "1"}).out, "0\n");
    auto b = run({"count", "--p", "2", "--n", "3", "--j", "2", "--brute-force"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "7\noracle 7\nMATCH\n");
    EXPECT_EQ(run({"count", "--p", "2", "--n", "3", "--j", "5"}).code, 2);
    EXPECT_EQ(run({"count", "--p", "7", "--n", "6", "--j", "2", "--brute-force"}).code, 2);
}

TEST_F(CliTest, UniversalExamples)
{
    EXPECT_EQ(run({"universal", "--p", "3", "--n", "3", "--no-cache"}).out.rfind("s_3 = 23", 0), 0u);
    EXPECT_EQ(run({"universal", "--p", "2", "--n", "4", "--q", "3", "--no-cache"}).out.rfind("s_3 = 10", 0), 0u);
    EXPECT_EQ(run({"universal", "--p", "2", "--n", "4", "--q", "5", "--no-cache"}).out.rfind("s_5 = 11", 0), 0u);
}

TEST_F(CliTest, CacheIsTransparent)
{
    for (auto m : {"5", "7", "8"}) {
        std::vector<std::string> base{"skeleton", "--m", m, "--k", "3", "--p", "3"};
        auto plain = base;
        plain.push_back("--no-cache");
        auto cached = base;
        cached.insert(cached.end(), {"--cache", cache_});
        auto a = run(plain);
        auto b = run(cached);
        auto c = run(cached);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out, c.out);
        EXPECT_NE(c.err.find("from cache"), std::string::npos);
    }
    auto table_plain = run({"table", "--p", "3", "--max-m", "6", "--no-cache"});
    auto table_cached = run({"table", "--p", "3", "--max-m", "6", "--cache", cache_});
    EXPECT_EQ(table_plain.out, run({"table", "--p", "3", "--max-m", "6", "--cache", cache_}).out);
    EXPECT_EQ(table_plain.out, table_cached.out);
}

TEST_F(CliTest, CorruptCacheWarnsOnly)
{
    write_text_file_atomic(cache_, "{ this is not json");
    auto r = run({"skeleton", "--m", "6", "--k", "3", "--p", "3", "--cache", cache_});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s_3 = 2 (closed-form + search)\n");
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, CacheRejectsPoisonedEntries)
{
    // A stored value that disagrees with its witness is not trusted.
    cli::ResultCache cache(cache_, std::cerr);
    auto good = sp_skeleton(6, 3, Prime(3));
    cache.store(good);
    auto doc = Json::parse(read_text_file(cache_));
    auto key = cli::ResultCache::key(ComplexDescriptor::skeleton(6, 3), Prime(3));
    doc["entries"][key]["value"] = 4;
    write_text_file_atomic(cache_, doc.dump());
    auto r = run({"skeleton", "--m", "6", "--k", "3", "--p", "3", "--cache", cache_});
    EXPECT_EQ(r.out, "s_3 = 2 (closed-form + search)\n");
}

TEST_F(CliTest, CachePathResolution)
{
    EXPECT_EQ(cli::resolve_cache_path("/tmp/x.json"), std::filesystem::path("/tmp/x.json"));
    ::setenv("MODP_CACHE", "/tmp/env.json", 1);
    EXPECT_EQ(cli::resolve_cache_path(""), std::filesystem::path("/tmp/env.json"));
    ::unsetenv("MODP_CACHE");
    ::setenv("XDG_DATA_HOME", "/tmp/xdg", 1);
    EXPECT_EQ(cli::resolve_cache_path(""), std::filesystem::path("/tmp/xdg/modp/cache.json"));
    ::unsetenv("XDG_DATA_HOME");
}

TEST_F(CliTest, WitnessRoundTrip)
{
    auto w = (dir_ / "w.json").string();
    auto r = run({"skeleton", "--m", "7", "--k", "2", "--p", "3", "--no-cache", "--witness", w});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run({"check-map", "--source", R"({"skeleton": {"m": 7, "k": 2}})", "--map", w}).code, 0);
}

TEST_F(CliTest, Version)
{
    auto r = run({"--version"});
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(r.out.empty());
}
