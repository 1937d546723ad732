#pragma once

// Tabular command output in csv, json or human-readable form.
//
// csv and json numbers use the shortest decimal string that round-trips
// to the same binary64 value; pretty output uses 6 significant digits.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "casimir/errors.hpp"

namespace casimir::report {

enum class Format { csv, json, pretty };

inline Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    throw DomainError("unknown output format '" + std::string(name) + "'");
}

using Cell = std::variant<double, long long, bool, std::string>;
using Fields = std::vector<std::pair<std::string, Cell>>;

struct Table {
    std::string command;
    Fields inputs;
    Fields config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Fields metadata;
    std::vector<std::string> notes; ///< extra lines for pretty output only
};

/// Shortest round-trip representation of a double.
inline std::string format_shortest(double x) {
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

inline std::string format_pretty(double x) {
    if (x == 0.0) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string cell_text(const Cell& c, bool pretty) {
    return std::visit(
        overloaded{
            [&](double d) { return pretty ? format_pretty(d) : format_shortest(d); },
            [](long long i) { return std::to_string(i); },
            [](bool b) { return std::string(b ? "true" : "false"); },
            [](const std::string& s) { return s; },
        },
        c);
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        overloaded{
            [](double d) {
                if (d == 0.0) d = 0.0;
                return std::isfinite(d) ? nlohmann::ordered_json(d) : nlohmann::ordered_json();
            },
            [](long long i) { return nlohmann::ordered_json(i); },
            [](bool b) { return nlohmann::ordered_json(b); },
            [](const std::string& s) { return nlohmann::ordered_json(s); },
        },
        c);
}

inline nlohmann::ordered_json fields_json(const Fields& fields) {
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields) obj[key] = cell_json(value);
    return obj;
}

} // namespace detail

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << detail::cell_text(row[i], false);
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = t.command;
    doc["inputs"] = detail::fields_json(t.inputs);
    doc["config"] = detail::fields_json(t.config);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = detail::cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["metadata"] = detail::fields_json(t.metadata);
    os << doc.dump(2) << '\n';
}

inline void write_pretty(std::ostream& os, const Table& t) {
    os << t.command << '\n';
    for (const auto& [key, value] : t.inputs)
        os << "  " << key << " = " << detail::cell_text(value, true) << '\n';

    std::vector<std::size_t> width(t.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        auto& line = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(detail::cell_text(row[i], true));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto pad = [&](const std::string& s, std::size_t w) {
        os << std::string(w - s.size() + 2, ' ') << s;
    };
    if (!t.rows.empty()) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) pad(t.columns[i], width[i]);
        os << '\n';
        for (const auto& line : text) {
            for (std::size_t i = 0; i < line.size(); ++i) pad(line[i], width[i]);
            os << '\n';
        }
    }
    for (const auto& [key, value] : t.metadata)
        os << "  " << key << ": " << detail::cell_text(value, true) << '\n';
    for (const auto& note : t.notes) os << "  " << note << '\n';
}

inline void write(std::ostream& os, const Table& t, Format f) {
    switch (f) {
    case Format::csv: write_csv(os, t); break;
    case Format::json: write_json(os, t); break;
    case Format::pretty: write_pretty(os, t); break;
    }
}

} // namespace casimir::report
