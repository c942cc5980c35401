// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Row-oriented result table with deterministic CSV and JSON encodings.

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xx0/bigint.hpp"
#include "xx0/laurent.hpp"
#include "xx0/laurent_json.hpp"

namespace xx0::cli {

using ordered_json = nlohmann::ordered_json;

/// 15 significant digits, shortest of fixed/scientific.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
    return buf;
}

struct Cell {
    enum class Kind { integer, real, text, boolean, exact, poly, null };
    Kind kind = Kind::null;
    long long i = 0;
    double d = 0.0;
    bool b = false;
    std::string s;
    LaurentPoly p;

    static Cell integer(long long v) { Cell c; c.kind = Kind::integer; c.i = v; return c; }
    static Cell real(double v) { Cell c; c.kind = Kind::real; c.d = v; return c; }
    static Cell text(std::string v) { Cell c; c.kind = Kind::text; c.s = std::move(v); return c; }
    static Cell boolean(bool v) { Cell c; c.kind = Kind::boolean; c.b = v; return c; }
    static Cell exact(const BigInt& v) { Cell c; c.kind = Kind::exact; c.s = to_decimal(v); return c; }
    static Cell poly(LaurentPoly v) { Cell c; c.kind = Kind::poly; c.p = std::move(v); return c; }
    static Cell null() { return Cell{}; }

    ordered_json to_json() const {
        switch (kind) {
            case Kind::integer: return i;
            case Kind::real: {
                // Round-trip through the printed form so JSON and CSV agree.
                return std::stod(format_double(d));
            }
            case Kind::text: return s;
            case Kind::boolean: return b;
            case Kind::exact: return s;
            case Kind::poly: return laurent_to_json(p);
            case Kind::null: return nullptr;
        }
        return nullptr;
    }

    std::string to_text() const {
        switch (kind) {
            case Kind::integer: return std::to_string(i);
            case Kind::real: return format_double(d);
            case Kind::text: return s;
            case Kind::boolean: return b ? "true" : "false";
            case Kind::exact: return s;
            case Kind::poly: return laurent_to_json(p).dump();
            case Kind::null: return "";
        }
        return "";
    }
};

class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    void add(std::vector<Cell> row) {
        row.resize(columns_.size());
        rows_.push_back(std::move(row));
    }

    ordered_json to_json() const {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows_) {
            ordered_json o = ordered_json::object();
            for (std::size_t c = 0; c < columns_.size(); ++c) o[columns_[c]] = row[c].to_json();
            arr.push_back(std::move(o));
        }
        return arr;
    }

    void write_csv(std::ostream& os) const {
        for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << quote(columns_[c]);
        os << "\n";
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << quote(row[c].to_text());
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const { os << to_json().dump(2) << "\n"; }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "csv")
            write_csv(os);
        else
            write_json(os);
    }

private:
    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace xx0::cli
