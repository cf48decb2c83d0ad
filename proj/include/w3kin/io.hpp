#pragma once

#include "rational.hpp"

#include <cstdio>
#include <iomanip>
#include <variant>
#include <vector>

namespace w3 {

/* 12 significant digits, plain or exponent notation — valid as a JSON number */
inline std::string format_sig12(double v)
{
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

using Cell = std::variant<long, double, Rational, std::string>;

/* Flat table with named columns.  Rationals render as "num/den" in exact mode
 * and as 12-significant-digit decimals otherwise; CSV and JSON carry the same
 * rendered values. */
struct OutputRecord {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool exact = false;

    void add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw std::logic_error("row width does not match the header");
        rows.push_back(std::move(row));
    }
};

namespace detail {

struct Rendered {
    std::string text;
    bool quoted; // string-valued in JSON
};

inline Rendered render_cell(const Cell& cell, bool exact)
{
    if (std::holds_alternative<long>(cell))
        return {std::to_string(std::get<long>(cell)), false};
    if (std::holds_alternative<double>(cell))
        return {format_sig12(std::get<double>(cell)), false};
    if (std::holds_alternative<Rational>(cell)) {
        const Rational& q = std::get<Rational>(cell);
        if (exact)
            return {to_string(q), !is_integer(q)}; // "num/den" is a JSON string
        return {format_sig12(to_double(q)), false};
    }
    return {std::get<std::string>(cell), true};
}

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string json_escape(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else if (c == '\t') {
            out += "\\t";
        } else if (c == '\r') {
            out += "\\r";
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
    return out + "\"";
}

} // namespace detail

inline std::string render_csv(const OutputRecord& rec)
{
    std::string out;
    for (size_t j = 0; j < rec.columns.size(); ++j)
        out += (j ? "," : "") + detail::csv_escape(rec.columns[j]);
    out += "\n";
    for (const auto& row : rec.rows) {
        for (size_t j = 0; j < row.size(); ++j)
            out += (j ? "," : "") + detail::csv_escape(detail::render_cell(row[j], rec.exact).text);
        out += "\n";
    }
    return out;
}

inline std::string render_json(const OutputRecord& rec)
{
    std::string out = "[\n";
    for (size_t i = 0; i < rec.rows.size(); ++i) {
        out += "  {";
        for (size_t j = 0; j < rec.columns.size(); ++j) {
            auto r = detail::render_cell(rec.rows[i][j], rec.exact);
            out += (j ? ", " : "") + detail::json_escape(rec.columns[j]) + ": " +
                   (r.quoted ? detail::json_escape(r.text) : r.text);
        }
        out += i + 1 < rec.rows.size() ? "},\n" : "}\n";
    }
    return out + "]\n";
}

inline std::string render(const OutputRecord& rec, const std::string& format)
{
    if (format == "csv")
        return render_csv(rec);
    if (format == "json")
        return render_json(rec);
    throw std::invalid_argument("unknown format: " + format);
}

} // namespace w3
