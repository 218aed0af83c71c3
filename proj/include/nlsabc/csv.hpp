#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nlsabc/solver.hpp"

namespace nlsabc {

using CsvCell = std::variant<double, long, std::string>;

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<CsvCell>> rows;
};

namespace csv_detail {

inline std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// Nine significant digits in scientific notation.
inline std::string format(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

inline std::string format(const CsvCell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format(*d);
    if (const auto* l = std::get_if<long>(&cell)) return std::to_string(*l);
    return quote(std::get<std::string>(cell));
}

}  // namespace csv_detail

/// RFC 4180 quoting with '\n' line ends. Identical tables give identical bytes.
inline std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += csv_detail::quote(table.header[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_detail::format(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline void emit_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_csv(table);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

inline CsvTable observables_table(const RunObservables& obs) {
    CsvTable t;
    t.header = {"time", "mass", "reflection", "reflection_amplitude", "boundary_re", "boundary_im"};
    if (obs.has_oracle) t.header.push_back("boundary_error");
    t.header.push_back("picard_iterations");
    for (std::size_t i = 0; i < obs.times.size(); ++i) {
        std::vector<CsvCell> row{obs.times[i],      obs.mass[i],
                                 obs.reflection[i], obs.reflection_amplitude[i],
                                 obs.boundary_value[i].real(), obs.boundary_value[i].imag()};
        if (obs.has_oracle) row.emplace_back(obs.boundary_error[i]);
        row.emplace_back(static_cast<long>(obs.picard_iterations[i]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Physical nodes only. `full` adds real and imaginary parts.
inline CsvTable snapshot_table(const WaveField& psi, const Grid& grid, bool full) {
    CsvTable t;
    t.header = full ? std::vector<std::string>{"x", "re", "im", "abs"} : std::vector<std::string>{"x", "abs"};
    for (int j = 0; j <= grid.intervals; ++j) {
        const Complex z = psi(j);
        if (full)
            t.rows.push_back({grid.x(j), z.real(), z.imag(), std::abs(z)});
        else
            t.rows.push_back({grid.x(j), std::abs(z)});
    }
    return t;
}

}  // namespace nlsabc
