#pragma once

#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cmax/errors.hpp"

namespace cmax {

/// Render a double with 17 significant digits (round-trippable).
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

/// Accumulates one JSON object, emitted as a single line.
class JsonObject {
public:
    JsonObject& number(std::string_view key, double value) {
        return raw(key, fmt17(value));
    }
    JsonObject& integer(std::string_view key, long value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& text(std::string_view key, std::string_view value) {
        return raw(key, json_quote(value));
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    JsonObject& raw(std::string_view key, std::string value) {
        if (!body_.empty()) body_ += ",";
        body_ += json_quote(key);
        body_ += ":";
        body_ += value;
        return *this;
    }
    std::string body_;
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding blanks and a trailing CR
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    return out;
}

inline double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("InvalidArgument: expected a number, got '" + s + "'");
    }
    if (pos != s.size())
        throw InvalidArgument("InvalidArgument: trailing characters in number '" + s + "'");
    return v;
}

struct NumericTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Read a CSV table with a header row; every data cell must be numeric.
/// Blank lines and lines starting with '#' are skipped.
inline NumericTable read_numeric_csv(std::istream& in) {
    NumericTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            table.header = split_csv_line(line);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        for (const std::string& cell : split_csv_line(line)) row.push_back(parse_double(cell));
        if (row.size() != table.header.size())
            throw InvalidArgument("InvalidArgument: CSV row width differs from header");
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace cmax
