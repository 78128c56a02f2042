#include "commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bridgemap;
using namespace bridgemap::cli;

namespace {

std::string run(int (*fn)(const std::string&, bool, std::ostream&), const std::string& arg, bool flag, int* code) {
    std::ostringstream out;
    *code = fn(arg, flag, out);
    return out.str();
}

}  // namespace

TEST(Info, TextOutput) {
    int code = -1;
    const auto out = run(cmd_info, "7/11", false, &code);
    EXPECT_EQ(code, exit_yes);
    EXPECT_NE(out.find("canonical: 3/11\n"), std::string::npos);
    EXPECT_NE(out.find("even: [2,2,-2,2]\n"), std::string::npos);
    EXPECT_NE(out.find("standard: [2,1,3]\n"), std::string::npos);
    EXPECT_NE(out.find("crossing: 6\n"), std::string::npos);
    EXPECT_NE(out.find("genus: 2\n"), std::string::npos);
    EXPECT_NE(out.find("fibered: true\n"), std::string::npos);
    EXPECT_NE(out.find("unknotting_one: true\n"), std::string::npos);
}

TEST(Info, JsonRoundTrip) {
    for (const char* k : {"1/3", "7/11", "38/85", "2/7"}) {
        int code = -1;
        const auto out = run(cmd_info, k, true, &code);
        const KnotInfo parsed = KnotInfo::from_json(nlohmann::json::parse(out));
        EXPECT_EQ(parsed, KnotInfo::of(parse_rational(k)));
        EXPECT_EQ(parsed.to_json().dump() + "\n", out);
    }
    const KnotInfo trefoil = KnotInfo::of(parse_rational("1/3"));
    EXPECT_EQ(trefoil.crossing, 3);
    EXPECT_EQ(trefoil.genus, 1);
    EXPECT_TRUE(trefoil.fibered);
    EXPECT_TRUE(trefoil.unknotting_one);
    EXPECT_THROW(KnotInfo::from_json(nlohmann::json::parse(R"({"input":"1/3"})")), ParseError);
}

TEST(Info, InvalidInput) {
    int code = -1;
    EXPECT_THROW(run(cmd_info, "2/4", false, &code), LinkNotKnot);
    EXPECT_THROW(run(cmd_info, "1-3", false, &code), ParseError);
}

TEST(Check, Verdicts) {
    std::ostringstream out;
    EXPECT_EQ(cmd_check("8/9", "1/3", false, false, out), exit_yes);
    EXPECT_EQ(cmd_check("8/9", "1/3", true, false, out), exit_no);
    EXPECT_EQ(cmd_check("2/5", "1/3", false, false, out), exit_no);
    EXPECT_EQ(out.str(), "yes\nno\nno\n");
    std::ostringstream self;
    EXPECT_EQ(cmd_check("1/3", "2/3", false, false, self), exit_error);
    EXPECT_EQ(self.str(), "self (excluded by convention)\n");
    std::ostringstream js;
    cmd_check("8/9", "1/3", false, true, js);
    const auto j = nlohmann::json::parse(js.str());
    EXPECT_EQ(j.at("verdict"), "yes");
    EXPECT_EQ(j.at("source"), "1/9");
}

TEST(Count, BruteCsvMatchesTableAndParsesBack) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_count({"1/3", 22, "unknotting-one", "brute", "csv"}, out, err), exit_yes);
    const CountTable t = CountTable::from_csv(out.str());
    EXPECT_EQ(t.at(6, 18), 3);
}

TEST(Count, BothModeReportsZeroDiff) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_count({"1/3", 22, "all", "both", "json"}, out, err), exit_yes);
    EXPECT_EQ(err.str(), "diff: 0 cells\n");
    const CountTable t = CountTable::from_json(nlohmann::json::parse(out.str()));
    EXPECT_EQ(t.at(4, 11), 5);
    EXPECT_EQ(t.at(7, 17), 18);
    EXPECT_EQ(t.at(8, 21), 9);
}

TEST(Count, EmptyBelowThreeTimesTargetCrossing) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_count({"7/11", 17, "all", "brute", "csv"}, out, err), exit_yes);
    EXPECT_EQ(out.str(), "genus,crossing,count\n");
}

TEST(Count, GridMirrorsPrintedLayout) {
    std::ostringstream out, err;
    cmd_count({"7/11", 31, "all", "closed", "grid"}, out, err);
    std::istringstream lines(out.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header.substr(0, 7), "g\\c 17 ");
    EXPECT_EQ(header.substr(header.size() - 2), "31");
    EXPECT_EQ(first.substr(0, 4), "  4 ");
    std::size_t rows = 1;
    for (std::string l; std::getline(lines, l);) ++rows;
    EXPECT_EQ(rows, 10u);  // genus 4..13
}

TEST(Count, UnsupportedCombinationsAreUsageErrors) {
    std::ostringstream out, err;
    EXPECT_THROW(cmd_count({"1/3", 22, "unknotting-one", "closed", "csv"}, out, err), InvalidInput);
    EXPECT_THROW(cmd_count({"1/3", 22, "unknotting-one", "both", "csv"}, out, err), InvalidInput);
    EXPECT_THROW(cmd_count({"2/7", 22, "fibered", "closed", "csv"}, out, err), InvalidInput);
    EXPECT_THROW(cmd_count({"1/3", 22, "bogus", "brute", "csv"}, out, err), InvalidInput);
    EXPECT_THROW(cmd_count({"1/3", 0, "all", "brute", "csv"}, out, err), InvalidInput);
}

TEST(Count, DegreeOneClosedEmitsOnlyCoveredCells) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_count({"7/11", 31, "degree-one", "both", "csv"}, out, err), exit_yes);
    EXPECT_EQ(err.str(), "diff: 0 cells\n");
    std::ostringstream closed;
    cmd_count({"1/3", 22, "degree-one", "closed", "csv"}, closed, err);
    const CountTable t = CountTable::from_csv(closed.str());
    EXPECT_EQ(t.at(3, 10), 2);
    EXPECT_EQ(t.at(4, 14), 0);  // not covered, so absent
}

TEST(Series, Listings) {
    std::ostringstream a, b, c;
    cmd_series("1/3", 9, "gc", a);
    EXPECT_EQ(a.str(), "1 s^2 t^9\n1 s^3 t^9\n1 s^4 t^9\n");
    cmd_series("7/11", 19, "c", b);
    EXPECT_EQ(b.str(), "4 t^18\n8 t^19\n");
    cmd_series("1/3", 8, "gc", c);
    EXPECT_EQ(c.str(), "");
    EXPECT_THROW(cmd_series("1/3", 8, "xy", c), InvalidInput);
}

TEST(ClassifyGenus, SingleAndRange) {
    std::ostringstream a, b;
    cmd_classify_genus("7/11", 8, std::nullopt, a);
    EXPECT_EQ(a.str(), "1\n");
    cmd_classify_genus("1/3", std::nullopt, 3, b);
    EXPECT_EQ(b.str(), "1 0\n2 1\n3 infinite\n");
    EXPECT_THROW(cmd_classify_genus("1/3", std::nullopt, std::nullopt, a), InvalidInput);
}

TEST(Enumerate, CsvAndJson) {
    std::ostringstream csv, js;
    cmd_enumerate("1/3", 9, "all", false, csv);  // 9_23, 9_6, 9_1
    EXPECT_EQ(csv.str(),
              "knot,crossing,genus,fibered,degree_one,unknotting_one\n"
              "19/45,9,2,0,0,0\n5/27,9,3,0,0,0\n1/9,9,4,1,0,0\n");
    cmd_enumerate("1/3", 9, "all", true, js);
    const auto j = nlohmann::json::parse(js.str());
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2].at("knot"), "1/9");
    EXPECT_EQ(j[2].dump(), image_json(enumerate_images(KnotClass(Rational(1, 3)), 9)[2]).dump());
}

TEST(Golden, FixtureParser) {
    const auto f = golden::parse_fixture("genus,crossing,count,annotation\n1,9,0,\n6,27,0,known-misprint\n");
    ASSERT_EQ(f.cells.size(), 2u);
    EXPECT_EQ(f.cells.at({6, 27}).annotation, "known-misprint");
    EXPECT_THROW(golden::parse_fixture("genus,crossing,count\n1,9,0\n"), ParseError);
    EXPECT_THROW(golden::parse_fixture("genus,crossing,count,annotation\n1,9\n"), ParseError);
}

TEST(Golden, EmbeddedFixturesMatchRepositoryFiles) {
    for (const auto& ref : golden::reference_tables())
        EXPECT_EQ(std::string(golden::embedded_fixtures.at(ref.id - 1)),
                  read_file(std::filesystem::path(BRIDGEMAP_GOLDEN_DIR) / ref.file_name()))
            << ref.id;
}

TEST(Golden, VerifyTablesReport) {
    std::ostringstream out;
    EXPECT_EQ(cmd_verify_tables("", {}, out), exit_yes);
    const std::string s = out.str();
    EXPECT_NE(s.find("summary: 8 tables, 7 matched, 1 matched with annotation, 0 mismatched"), std::string::npos);
    EXPECT_NE(s.find("table 6 (6_2 = 7/11, degree-one): matched with annotation"), std::string::npos);
    EXPECT_NE(s.find("(g=6, c=28): fixture 4, computed 0 [known-misprint]"), std::string::npos);
}

TEST(Golden, MutatedFixtureNamesTheCell) {
    const auto dir = std::filesystem::temp_directory_path() / "bridgemap_mutated_fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& ref : golden::reference_tables()) {
        std::string text(golden::embedded_fixtures.at(ref.id - 1));
        if (ref.id == 2) {
            const std::string cell = "\n7,31,52,\n";
            const auto pos = text.find(cell);
            ASSERT_NE(pos, std::string::npos);
            text.replace(pos, cell.size(), "\n7,31,53,\n");
        }
        std::ofstream(dir / ref.file_name()) << text;
    }
    std::ostringstream out;
    EXPECT_EQ(cmd_verify_tables(dir.string(), {2}, out), exit_no);
    EXPECT_NE(out.str().find("table 2 (6_2 = 7/11, all): MISMATCH"), std::string::npos);
    EXPECT_NE(out.str().find("FAIL: (g=7, c=31): fixture 53, computed 52"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Golden, UnknownTableIsAnError) {
    std::ostringstream out;
    EXPECT_THROW(cmd_verify_tables("", {9}, out), InvalidInput);
}
