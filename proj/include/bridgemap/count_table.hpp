#pragma once

#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bridgemap {

enum class Provenance { closed_form, brute_force };

/// Exact counts keyed by (genus, crossing). Only nonzero cells are stored,
/// so equality compares supports and values.
class CountTable {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    explicit CountTable(Provenance provenance = Provenance::brute_force) : provenance_(provenance) {}

    Provenance provenance() const noexcept { return provenance_; }
    const std::map<Key, Integer>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    void add(std::int64_t genus, std::int64_t crossing, const Integer& count) {
        if (count < 0) throw InvalidInput("counts must be nonnegative");
        if (count == 0) return;
        entries_[{genus, crossing}] += count;
    }

    Integer at(std::int64_t genus, std::int64_t crossing) const {
        auto it = entries_.find({genus, crossing});
        return it == entries_.end() ? Integer(0) : it->second;
    }

    Integer row_sum(std::int64_t genus) const {
        Integer s = 0;
        for (const auto& [key, v] : entries_)
            if (key.first == genus) s += v;
        return s;
    }

    Integer column_sum(std::int64_t crossing) const {
        Integer s = 0;
        for (const auto& [key, v] : entries_)
            if (key.second == crossing) s += v;
        return s;
    }

    CountTable& operator+=(const CountTable& other) {
        for (const auto& [key, v] : other.entries_) entries_[key] += v;
        return *this;
    }

    friend bool operator==(const CountTable& a, const CountTable& b) { return a.entries_ == b.entries_; }

    /// "genus,crossing,count" with rows sorted by (genus, crossing).
    std::string to_csv() const {
        std::string out = "genus,crossing,count\n";
        for (const auto& [key, v] : entries_)
            out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + v.str() + "\n";
        return out;
    }

    static CountTable from_csv(std::string_view text, Provenance provenance = Provenance::brute_force) {
        CountTable t(provenance);
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (lineno == 1) {
                if (line.rfind("genus,crossing,count", 0) != 0) throw ParseError("missing CSV header", 0);
                continue;
            }
            if (line.empty()) continue;
            const auto fields = split_csv(line);
            if (fields.size() < 3) throw ParseError("expected genus,crossing,count on line " + std::to_string(lineno), 0);
            t.add(parse_int(fields[0]), parse_int(fields[1]), Integer(fields[2]));
        }
        return t;
    }

    /// Object keyed "g:c"; counts are JSON integers, or decimal strings
    /// when they exceed 64 bits.
    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [key, v] : entries_) {
            const std::string k = std::to_string(key.first) + ":" + std::to_string(key.second);
            if (v <= std::numeric_limits<std::uint64_t>::max())
                j[k] = v.convert_to<std::uint64_t>();
            else
                j[k] = v.str();
        }
        return j;
    }

    static CountTable from_json(const nlohmann::json& j, Provenance provenance = Provenance::brute_force) {
        if (!j.is_object()) throw InvalidInput("count table JSON must be an object");
        CountTable t(provenance);
        for (const auto& [k, v] : j.items()) {
            const auto colon = k.find(':');
            if (colon == std::string::npos) throw ParseError("expected key 'g:c'", 0);
            const auto g = parse_int(k.substr(0, colon));
            const auto c = parse_int(k.substr(colon + 1));
            if (v.is_number_unsigned() || v.is_number_integer())
                t.add(g, c, Integer(v.get<std::uint64_t>()));
            else if (v.is_string())
                t.add(g, c, Integer(v.get<std::string>()));
            else
                throw InvalidInput("count for " + k + " must be an integer");
        }
        return t;
    }

    /// Genus rows by crossing columns, like the printed tables.
    std::string to_grid(std::int64_t g_lo, std::int64_t g_hi, std::int64_t c_lo, std::int64_t c_hi) const {
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{"g\\c"};
        for (auto c = c_lo; c <= c_hi; ++c) header.push_back(std::to_string(c));
        cells.push_back(header);
        for (auto g = g_lo; g <= g_hi; ++g) {
            std::vector<std::string> row{std::to_string(g)};
            for (auto c = c_lo; c <= c_hi; ++c) row.push_back(at(g, c).str());
            cells.push_back(std::move(row));
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : cells)
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        std::string out;
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ' ';
                out += std::string(width[i] - row[i].size(), ' ') + row[i];
            }
            out += '\n';
        }
        return out;
    }

private:
    static std::vector<std::string> split_csv(const std::string& line) {
        std::vector<std::string> out;
        std::string field;
        std::istringstream in(line);
        while (std::getline(in, field, ',')) out.push_back(field);
        if (!line.empty() && line.back() == ',') out.emplace_back();
        return out;
    }

    static std::int64_t parse_int(const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + s + "'", 0);
        }
        if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'", used);
        return v;
    }

    Provenance provenance_;
    std::map<Key, Integer> entries_;
};

struct CellDiff {
    std::int64_t genus;
    std::int64_t crossing;
    Integer left;
    Integer right;
};

/// Cells whose counts differ, over the union of supports.
inline std::vector<CellDiff> diff(const CountTable& a, const CountTable& b) {
    std::vector<CellDiff> out;
    std::map<CountTable::Key, bool> keys;
    for (const auto& [k, v] : a.entries()) keys[k] = true;
    for (const auto& [k, v] : b.entries()) keys[k] = true;
    for (const auto& [k, unused] : keys) {
        Integer x = a.at(k.first, k.second), y = b.at(k.first, k.second);
        if (x != y) out.push_back({k.first, k.second, std::move(x), std::move(y)});
    }
    return out;
}

}  // namespace bridgemap
