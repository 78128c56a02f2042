#pragma once

// Regression harness for the eight published count tables. Fixtures are CSV
// files "genus,crossing,count,annotation" covering every printed cell; a
// nonempty annotation marks a cell whose printed value is known to be wrong.

#include <bridgemap/count_table.hpp>
#include <bridgemap/counting.hpp>
#include <bridgemap/error.hpp>
#include <bridgemap/knot_class.hpp>
#include <bridgemap/ors.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace bridgemap::golden {

struct TableInfo {
    int id;
    std::string target;  // "q/p"
    std::int64_t max_crossing;
    CountFilter filter;
    std::string caption;

    std::string file_name() const { return "table" + std::to_string(id) + ".csv"; }
};

inline const std::vector<TableInfo>& reference_tables() {
    static const std::vector<TableInfo> tables{
        {1, "1/3", 22, CountFilter::all, "3_1 = 1/3"},
        {2, "7/11", 31, CountFilter::all, "6_2 = 7/11"},
        {3, "1/3", 22, CountFilter::fibered, "3_1 = 1/3"},
        {4, "7/11", 31, CountFilter::fibered, "6_2 = 7/11"},
        {5, "1/3", 22, CountFilter::degree_one, "3_1 = 1/3"},
        {6, "7/11", 31, CountFilter::degree_one, "6_2 = 7/11"},
        {7, "1/3", 22, CountFilter::unknotting_one, "3_1 = 1/3"},
        {8, "7/11", 31, CountFilter::unknotting_one, "6_2 = 7/11"},
    };
    return tables;
}

struct FixtureCell {
    Integer count;
    std::string annotation;
};

struct Fixture {
    std::map<CountTable::Key, FixtureCell> cells;
};

inline Fixture parse_fixture(const std::string& text) {
    Fixture f;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "genus,crossing,count,annotation") throw ParseError("bad fixture header", 0);
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 4) throw ParseError("fixture line " + std::to_string(lineno) + " needs 4 fields", 0);
        try {
            f.cells[{std::stoll(fields[0]), std::stoll(fields[1])}] = {Integer(fields[2]), fields[3]};
        } catch (const std::exception&) {
            throw ParseError("fixture line " + std::to_string(lineno) + " is malformed", 0);
        }
    }
    return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open fixture " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

enum class Status { matched, annotated, mismatch };

struct TableReport {
    int id = 0;
    Status status = Status::matched;
    std::size_t cells = 0;
    std::vector<std::string> notes;     // annotated deviations
    std::vector<std::string> failures;  // unexplained differences
    CountTable brute;

    std::string render(const TableInfo& ref) const {
        std::string out = "table " + std::to_string(id) + " (" + ref.caption + ", " + to_string(ref.filter) + "): ";
        switch (status) {
        case Status::matched: out += "matched"; break;
        case Status::annotated: out += "matched with annotation"; break;
        case Status::mismatch: out += "MISMATCH"; break;
        }
        out += " [" + std::to_string(cells) + " cells]\n";
        for (const auto& n : notes) out += "  note: " + n + "\n";
        for (const auto& f : failures) out += "  FAIL: " + f + "\n";
        return out;
    }
};

inline std::string cell_name(std::int64_t g, std::int64_t c) {
    return "(g=" + std::to_string(g) + ", c=" + std::to_string(c) + ")";
}

/// Checks one table against images already enumerated for its target: the
/// closed form (where one exists) against the enumeration, then every
/// fixture cell.
inline TableReport verify_table(const TableInfo& ref, const Fixture& fixture, const std::vector<ImageRecord>& images) {
    TableReport report;
    report.id = ref.id;
    const KnotClass target(parse_rational(ref.target));
    for (const auto& rec : images)
        if (rec.crossing() <= ref.max_crossing && passes(rec, ref.filter)) report.brute.add(rec.genus(), rec.crossing(), 1);

    if (ref.filter != CountFilter::unknotting_one) {
        for (const auto& d : closed_vs_brute(target, ref.max_crossing, ref.filter, report.brute))
            report.failures.push_back("closed form gives " + d.left.str() + " but enumeration gives " + d.right.str() +
                                      " at " + cell_name(d.genus, d.crossing));
    }

    for (const auto& [key, cell] : fixture.cells) {
        ++report.cells;
        const Integer computed = report.brute.at(key.first, key.second);
        if (computed == cell.count) continue;
        const std::string what =
            cell_name(key.first, key.second) + ": fixture " + cell.count.str() + ", computed " + computed.str();
        if (cell.annotation.empty())
            report.failures.push_back(what);
        else
            report.notes.push_back(what + " [" + cell.annotation + "]");
    }
    // Computed nonzero cells the fixture does not cover.
    for (const auto& [key, v] : report.brute.entries())
        if (!fixture.cells.contains(key))
            report.failures.push_back(cell_name(key.first, key.second) + ": computed " + v.str() + " outside the fixture grid");

    if (!report.failures.empty())
        report.status = Status::mismatch;
    else if (!report.notes.empty())
        report.status = Status::annotated;
    return report;
}

inline TableReport verify_table(const TableInfo& ref, const Fixture& fixture, const EnumerationOptions& options = {}) {
    const KnotClass target(parse_rational(ref.target));
    return verify_table(ref, fixture, enumerate_images(target, ref.max_crossing, options));
}

/// Verifies every table whose id is selected (all when `ids` is empty),
/// enumerating each target once. `fixture_text(id)` supplies the CSV.
template <class FixtureSource>
std::vector<TableReport> verify_tables(FixtureSource&& fixture_text, const std::vector<int>& ids = {},
                                       const EnumerationOptions& options = {}) {
    std::map<std::pair<std::string, std::int64_t>, std::vector<ImageRecord>> cache;
    std::vector<TableReport> out;
    for (const auto& ref : reference_tables()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), ref.id) == ids.end()) continue;
        const auto key = std::make_pair(ref.target, ref.max_crossing);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, enumerate_images(KnotClass(parse_rational(ref.target)), ref.max_crossing, options))
                     .first;
        out.push_back(verify_table(ref, parse_fixture(fixture_text(ref.id)), it->second));
    }
    return out;
}

inline const TableInfo& table_info(int id) {
    for (const auto& s : reference_tables())
        if (s.id == id) return s;
    throw InvalidInput("no table " + std::to_string(id) + "; tables are numbered 1 to 8");
}

}  // namespace bridgemap::golden
