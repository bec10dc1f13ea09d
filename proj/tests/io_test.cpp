#include <modp/errors.hpp>
#include <modp/invariants.hpp>
#include <modp/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace modp;

namespace {

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() /
        ("modp_io_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST(ComplexJson, RoundTrip)
{
    for (const auto & c : {ComplexDescriptor::skeleton(6, 3), ComplexDescriptor::universal(Prime(3), 2),
             ComplexDescriptor::explicit_complex(5, {{0, 1, 2}, {2, 3}, {4}})}) {
        auto back = complex_from_json(complex_to_json(c));
        EXPECT_EQ(back.canonical_string(), c.canonical_string());
    }
}

TEST(ComplexJson, RejectsMalformed)
{
    EXPECT_THROW(complex_from_json(Json::parse(R"({"skeleton": {"m": 3}})")), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"torus": {}})")), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"universal": {"p": 4, "n": 2}})")), FormatError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"explicit": {"vertices": 2, "maximal_simplices": [[0, 5]]}})")),
        FormatError);
    EXPECT_THROW(complex_from_json(Json::parse("[1, 2]")), FormatError);
}

TEST(VertexMapJson, RoundTripReverifies)
{
    auto f = build_f24_to_f35_map();
    auto back = vertex_map_from_json(Json::parse(vertex_map_to_json(f).dump()));
    EXPECT_EQ(back, f);
    EXPECT_TRUE(check_nondegenerate(ComplexDescriptor::universal(Prime(2), 4), back));
}

TEST(VertexMapJson, RejectsMalformed)
{
    EXPECT_THROW(vertex_map_from_json(Json::parse(R"({"p": 3, "r": 2, "assignments": {"0": [1]}})")), FormatError);
    EXPECT_THROW(vertex_map_from_json(Json::parse(R"({"p": 3, "r": 2, "assignments": {"0": [0, 0]}})")), FormatError);
    EXPECT_THROW(vertex_map_from_json(Json::parse(R"({"p": 3, "r": 2, "assignments": {"x": [1, 0]}})")), FormatError);
    EXPECT_THROW(vertex_map_from_json(Json::parse(R"({"p": 3, "r": 2, "assignments": {"0": [3, 0]}})")), FormatError);
    EXPECT_THROW(vertex_map_from_json(Json::parse(R"({"p": 3, "assignments": {}})")), FormatError);
}

TEST(InvariantJson, CarriesBoundsAndProvenance)
{
    auto j = invariant_to_json(sp_skeleton(6, 3, Prime(3)));
    EXPECT_EQ(j.at("lower"), 2);
    EXPECT_EQ(j.at("upper"), 2);
    EXPECT_EQ(j.at("exact"), true);
    EXPECT_EQ(j.at("p"), 3);
    EXPECT_EQ(j.at("lower_method"), "closed-form");
    EXPECT_EQ(j.at("upper_method"), "search");
}

TEST(Files, LoadJsonArgumentAcceptsInlineOrPath)
{
    auto dir = temp_dir();
    auto path = dir / "c.json";
    write_text_file_atomic(path, R"({"skeleton": {"m": 2, "k": 1}})");
    EXPECT_EQ(load_json_argument(path.string()), load_json_argument(R"({"skeleton": {"m": 2, "k": 1}})"));
    EXPECT_THROW(load_json_argument((dir / "missing.json").string()), FormatError);
    write_text_file_atomic(path, "{ not json");
    EXPECT_THROW(load_json_argument(path.string()), FormatError);
    std::filesystem::remove_all(dir);
}

TEST(Files, AtomicWriteReplacesContent)
{
    auto dir = temp_dir();
    auto path = dir / "out.txt";
    write_text_file_atomic(path, "first");
    write_text_file_atomic(path, "second");
    EXPECT_EQ(read_text_file(path), "second");
    int entries = 0;
    for ([[maybe_unused]] const auto & e : std::filesystem::directory_iterator(dir))
        ++entries;
    EXPECT_EQ(entries, 1);
    std::filesystem::remove_all(dir);
}
