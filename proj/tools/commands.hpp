#pragma once

// Subcommand bodies for the bridgemap executable. Each takes parsed options
// and output streams and returns the process exit code, so tests can drive
// them without spawning a process.

#include <bridgemap/bridgemap.hpp>
#include <bridgemap/golden_data.hpp>

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bridgemap::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

namespace detail {

inline nlohmann::json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ParseError("expected an integer", 0);
}

inline nlohmann::json cf_json(const ContinuedFraction& cf) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : cf.entries()) a.push_back(integer_json(x));
    return a;
}

inline std::vector<Integer> cf_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers", 0);
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// ---- info ----

struct KnotInfo {
    std::string input;
    Rational canonical;
    ContinuedFraction even;
    ContinuedFraction standard;
    std::int64_t crossing;
    std::int64_t genus;
    bool fibered;
    bool unknotting_one;

    static KnotInfo of(const Rational& r) {
        const KnotClass k(r);
        return {r.str(),         k.canonical(),    even_cf(r),   standard_cf(r),
                k.crossing(),    k.genus(),        is_fibered(k), has_unknotting_number_one(k)};
    }

    nlohmann::json to_json() const {
        return {{"input", input},
                {"canonical", canonical.str()},
                {"even", detail::cf_json(even)},
                {"standard", detail::cf_json(standard)},
                {"crossing", crossing},
                {"genus", genus},
                {"fibered", fibered},
                {"unknotting_one", unknotting_one}};
    }

    static KnotInfo from_json(const nlohmann::json& j) {
        try {
            return {j.at("input").get<std::string>(),
                    parse_rational(j.at("canonical").get<std::string>()),
                    ContinuedFraction(detail::cf_from_json(j.at("even")), Flavor::even),
                    ContinuedFraction(detail::cf_from_json(j.at("standard")), Flavor::standard),
                    j.at("crossing").get<std::int64_t>(),
                    j.at("genus").get<std::int64_t>(),
                    j.at("fibered").get<bool>(),
                    j.at("unknotting_one").get<bool>()};
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed info JSON: ") + e.what(), 0);
        }
    }

    friend bool operator==(const KnotInfo&, const KnotInfo&) = default;
};

inline int cmd_info(const std::string& text, bool json, std::ostream& out) {
    const KnotInfo info = KnotInfo::of(parse_rational(text));
    if (json) {
        out << info.to_json().dump() << '\n';
        return exit_yes;
    }
    out << "knot: " << info.input << '\n'
        << "canonical: " << info.canonical.str() << '\n'
        << "even: " << info.even.str() << '\n'
        << "standard: " << info.standard.str() << '\n'
        << "crossing: " << info.crossing << '\n'
        << "genus: " << info.genus << '\n'
        << "fibered: " << detail::flag(info.fibered) << '\n'
        << "unknotting_one: " << detail::flag(info.unknotting_one) << '\n';
    return exit_yes;
}

// ---- check ----

inline int cmd_check(const std::string& source_text, const std::string& target_text, bool degree_one, bool json,
                     std::ostream& out) {
    const KnotClass source(parse_rational(source_text));
    const KnotClass target(parse_rational(target_text));
    std::string verdict;
    int code = exit_yes;
    if (source == target) {
        verdict = "self (excluded by convention)";
        code = exit_error;
    } else {
        const Witness w = find_witness(source, target, degree_one);
        const bool yes = degree_one ? w.degree_one : w.exists;
        verdict = yes ? "yes" : "no";
        code = yes ? exit_yes : exit_no;
    }
    if (json)
        out << nlohmann::json{{"source", source.str()}, {"target", target.str()}, {"degree_one", degree_one},
                              {"verdict", verdict}}
                   .dump()
            << '\n';
    else
        out << verdict << '\n';
    return code;
}

// ---- count ----

enum class Mode { closed, brute, both };
enum class Format { csv, json, grid };

inline CountFilter parse_filter(const std::string& s) {
    if (s == "all") return CountFilter::all;
    if (s == "fibered") return CountFilter::fibered;
    if (s == "degree-one") return CountFilter::degree_one;
    if (s == "unknotting-one") return CountFilter::unknotting_one;
    throw InvalidInput("unknown filter '" + s + "'");
}

inline Mode parse_mode(const std::string& s) {
    if (s == "closed") return Mode::closed;
    if (s == "brute") return Mode::brute;
    if (s == "both") return Mode::both;
    throw InvalidInput("unknown mode '" + s + "'");
}

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "grid") return Format::grid;
    throw InvalidInput("unknown format '" + s + "'");
}

inline std::string render_table(const CountTable& t, const KnotClass& target, std::int64_t max_crossing, Format f) {
    switch (f) {
    case Format::csv: return t.to_csv();
    case Format::json: return t.to_json().dump() + "\n";
    case Format::grid: {
        const TargetProfile p(target);
        const std::int64_t g_lo = std::max<std::int64_t>(3 * p.genus - 2, 1);
        const std::int64_t g_hi = std::max(p.max_genus(max_crossing) + 1, g_lo);
        const std::int64_t c_lo = 3 * p.crossing - 1;
        if (max_crossing < c_lo) return "";
        return t.to_grid(g_lo, g_hi, c_lo, max_crossing);
    }
    }
    return "";
}

struct CountArgs {
    std::string target;
    std::int64_t max_crossing = 0;
    std::string filter = "all";
    std::string mode = "brute";
    std::string format = "csv";
};

/// Table on `out`; in mode both the closed-form diff goes to `err` and any
/// differing cell makes the exit code 1.
inline int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    const KnotClass target(parse_rational(a.target));
    const CountFilter filter = parse_filter(a.filter);
    const Mode mode = parse_mode(a.mode);
    const Format format = parse_format(a.format);
    if (a.max_crossing < 1) throw InvalidInput("--max-crossing must be positive");
    if (filter == CountFilter::unknotting_one && mode != Mode::brute)
        throw InvalidInput("the unknotting-one filter has no closed form; use --mode brute");
    if (filter == CountFilter::fibered && mode != Mode::brute && !is_fibered(target))
        throw InvalidInput("closed fibered counts need a fibered target");

    if (mode == Mode::closed) {
        out << render_table(closed_table(target, a.max_crossing, filter), target, a.max_crossing, format);
        return exit_yes;
    }
    const CountTable brute = count_brute(target, a.max_crossing, filter);
    out << render_table(brute, target, a.max_crossing, format);
    if (mode == Mode::brute) return exit_yes;

    const auto diffs = closed_vs_brute(target, a.max_crossing, filter, brute);
    err << "diff: " << diffs.size() << " cells\n";
    for (const auto& d : diffs)
        err << "  g=" << d.genus << " c=" << d.crossing << " closed=" << d.left << " brute=" << d.right << '\n';
    return diffs.empty() ? exit_yes : exit_no;
}

// ---- series ----

inline int cmd_series(const std::string& target_text, std::int64_t max_crossing, const std::string& vars,
                      std::ostream& out) {
    SeriesMode mode;
    if (vars == "gc")
        mode = SeriesMode::two_var;
    else if (vars == "c")
        mode = SeriesMode::one_var;
    else
        throw InvalidInput("--vars must be gc or c");
    const KnotClass target(parse_rational(target_text));
    for (const auto& m : series_coefficients(target, max_crossing, mode)) {
        out << m.coefficient;
        if (m.genus) out << " s^" << *m.genus;
        out << " t^" << m.crossing << '\n';
    }
    return exit_yes;
}

// ---- classify-genus ----

inline int cmd_classify_genus(const std::string& target_text, std::optional<std::int64_t> genus,
                              std::optional<std::int64_t> max_genus, std::ostream& out) {
    const KnotClass target(parse_rational(target_text));
    if (genus.has_value() == max_genus.has_value()) throw InvalidInput("give exactly one of --genus and --max-genus");
    if (genus) {
        out << to_string(genus_count_class(target, *genus)) << '\n';
        return exit_yes;
    }
    for (std::int64_t g = 1; g <= *max_genus; ++g) out << g << ' ' << to_string(genus_count_class(target, g)) << '\n';
    return exit_yes;
}

// ---- enumerate ----

inline nlohmann::json image_json(const ImageRecord& r) {
    return {{"knot", r.knot.str()},          {"crossing", r.crossing()},   {"genus", r.genus()},
            {"fibered", r.fibered},          {"degree_one", r.degree_one}, {"unknotting_one", r.unknotting_one},
            {"unit_c_witness", r.unit_c_witness}};
}

inline int cmd_enumerate(const std::string& target_text, std::int64_t max_crossing, const std::string& filter_text,
                         bool json, std::ostream& out) {
    const KnotClass target(parse_rational(target_text));
    const CountFilter filter = parse_filter(filter_text);
    const auto images = enumerate_images(target, max_crossing);
    if (json) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : images)
            if (passes(r, filter)) a.push_back(image_json(r));
        out << a.dump() << '\n';
        return exit_yes;
    }
    out << "knot,crossing,genus,fibered,degree_one,unknotting_one\n";
    for (const auto& r : images)
        if (passes(r, filter))
            out << r.knot.str() << ',' << r.crossing() << ',' << r.genus() << ',' << int(r.fibered) << ','
                << int(r.degree_one) << ',' << int(r.unknotting_one) << '\n';
    return exit_yes;
}

// ---- verify-tables ----

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Empty `fixtures_dir` means the fixtures compiled into the binary.
inline int cmd_verify_tables(const std::string& fixtures_dir, const std::vector<int>& ids, std::ostream& out) {
    for (int id : ids) golden::table_info(id);
    auto source = [&](int id) -> std::string {
        if (fixtures_dir.empty()) return std::string(golden::embedded_fixtures.at(id - 1));
        return read_file(std::filesystem::path(fixtures_dir) / golden::table_info(id).file_name());
    };
    const auto reports = golden::verify_tables(source, ids);
    std::size_t matched = 0, annotated = 0, failed = 0;
    for (const auto& r : reports) {
        out << r.render(golden::table_info(r.id));
        switch (r.status) {
        case golden::Status::matched: ++matched; break;
        case golden::Status::annotated: ++annotated; break;
        case golden::Status::mismatch: ++failed; break;
        }
    }
    out << "summary: " << reports.size() << " tables, " << matched << " matched, " << annotated
        << " matched with annotation, " << failed << " mismatched\n";
    return failed == 0 ? exit_yes : exit_no;
}

}  // namespace bridgemap::cli
