#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "pml/io.hpp"

using namespace pml;

TEST(Io, PosetJsonRoundTrip) {
    Poset p = comb(3);
    Json j = poset_to_json(p);
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(poset_from_json(j), p);

    EXPECT_THROW(poset_from_json(Json::parse(R"({"n": 2})")), Error);
    EXPECT_THROW(poset_from_json(Json::parse(R"({"n": 2, "covers": [[0]]})")), Error);
    EXPECT_THROW(poset_from_json(Json::parse(R"({"n": 2, "covers": [[0, 5]]})")), Error);
}

TEST(Io, PosetFileLoading) {
    std::string path = ::testing::TempDir() + "pml_poset.json";
    {
        std::ofstream out(path);
        out << R"({"n": 2, "covers": [[0, 1]]})";
    }
    EXPECT_EQ(load_poset_file(path), chain(2));
    std::remove(path.c_str());
    EXPECT_THROW(load_poset_file(path), Error);
}

TEST(Io, FamilyLiterals) {
    EXPECT_EQ(parse_poset_spec("chain:5"), chain(5));
    EXPECT_EQ(parse_poset_spec("star:2,2,3"), extended_star({2, 2, 3}));
    EXPECT_EQ(parse_poset_spec("comb:4"), comb(4));
    EXPECT_EQ(parse_poset_spec("zipper:2"), zipper(2));
    EXPECT_EQ(parse_poset_spec("t3:3"), three_leaf_tree(3));

    EXPECT_THROW(parse_poset_spec("hedge:3"), Error);
    EXPECT_THROW(parse_poset_spec("chain:"), Error);
    EXPECT_THROW(parse_poset_spec("chain:x"), Error);
    EXPECT_THROW(parse_poset_spec("star:2,2,3,"), Error);
    EXPECT_THROW(parse_poset_spec("comb:4,5"), Error);
    EXPECT_THROW(parse_poset_spec("/nonexistent/path.json"), Error);
}

TEST(Io, LabelingJson) {
    Json j = labeling_to_json({1, 2, 2, 3, 4}, 4);
    EXPECT_EQ(j["m"], 4);
    PackedLabeling back = labeling_from_json(j);
    EXPECT_EQ(back.m, 4);
    EXPECT_EQ(back.labels, (Labels{1, 2, 2, 3, 4}));
}

TEST(Io, DecompositionJsonShape) {
    Poset p = comb(3);
    auto d = orbit_decomposition(p, 4, Operator::KPromotion);
    Json j = decomposition_to_json(p, d);
    EXPECT_EQ(j["operator"], "kpromotion");
    EXPECT_EQ(j["m"], 4);
    EXPECT_EQ(j["order"], "6");
    EXPECT_EQ(j["multiset"]["6"], 1);
    ASSERT_EQ(j["orbits"].size(), 1u);
    EXPECT_EQ(j["orbits"][0]["size"], 6);
    EXPECT_EQ(j["poset"]["n"], 6);

    // Byte-identical across repeated serialization.
    auto d2 = orbit_decomposition(p, 4, Operator::KPromotion, 3);
    EXPECT_EQ(j.dump(), decomposition_to_json(p, d2).dump());
}

TEST(Io, CheckReportRendering) {
    CheckReport report{"demo", "subject", {}, {}};
    report.require("good", true, "fine");
    report.require("bad", false, "broken");
    report.note("a note");
    Json j = check_report_to_json(report);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_EQ(j["clauses"].size(), 2u);
    std::string text = check_report_to_text(report);
    EXPECT_NE(text.find("[FAIL] demo"), std::string::npos);
    EXPECT_NE(text.find("note: a note"), std::string::npos);
}

TEST(Io, TableRendering) {
    auto report = reproduce_table(TableFamily::Comb, 3, 3);
    std::string tsv = table_report_to_text(report, true);
    EXPECT_NE(tsv.find("comb:3\t4\t6^1\t6\tmatch"), std::string::npos);
    Json j = table_report_to_json(report);
    EXPECT_TRUE(j["all_match"].get<bool>());
    EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(Io, CspTsv) {
    auto d = orbit_decomposition(extended_star({1, 1}), 3, Operator::KPromotion);
    auto report = csp_check(d, q_int(2));
    std::string tsv = csp_report_to_tsv(report);
    EXPECT_NE(tsv.find("d\tfixed_points\tf_value\tmatch"), std::string::npos);
    EXPECT_NE(tsv.find("0\t2\t2\tyes"), std::string::npos);
}
