#include "pam/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pam/units.hpp"

namespace pam {

namespace {

constexpr const char* curve_header = "pressure_bar,contraction_ratio,force_N";

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_cell(const std::string& cell, std::size_t row, const char* column) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &pos);
    } catch (const std::exception&) {
        throw IoError("row " + std::to_string(row) + ": non-numeric " + column + " cell '" +
                      cell + "'");
    }
    if (pos != cell.size())
        throw IoError("row " + std::to_string(row) + ": trailing characters in " + column +
                      " cell '" + cell + "'");
    return value;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string format9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

ForceCurveDataset load_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path.string() + "': empty file");
    if (strip_cr(line) != curve_header)
        throw IoError("'" + path.string() + "': expected header '" + curve_header + "', got '" +
                      strip_cr(line) + "'");

    ForceCurveDataset ds;
    ds.muscle_id = path.stem().string();

    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_commas(line);
        if (cells.size() != 3)
            throw IoError("row " + std::to_string(row) + ": expected 3 columns, got " +
                          std::to_string(cells.size()));
        ForceSample s;
        s.pressure_pa = parse_cell(cells[0], row, "pressure_bar") * units::bar_to_pa;
        s.eps = parse_cell(cells[1], row, "contraction_ratio");
        s.force_n = parse_cell(cells[2], row, "force_N");
        s.row = row;
        if (!(s.pressure_pa > 0.0))
            throw IoError("row " + std::to_string(row) + ": pressure must be > 0");
        if (!(s.eps >= 0.0))
            throw IoError("row " + std::to_string(row) + ": contraction ratio must be >= 0");
        if (!std::isfinite(s.force_n))
            throw IoError("row " + std::to_string(row) + ": force must be finite");
        for (const auto& prev : ds.samples)
            if (prev.pressure_pa == s.pressure_pa && prev.eps == s.eps)
                throw IoError("row " + std::to_string(row) + ": duplicate (pressure, contraction) key");
        ds.samples.push_back(s);
    }
    if (ds.samples.empty()) throw IoError("'" + path.string() + "': no data rows");
    return ds;
}

std::string format_sweep_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << "stiffness_Nm_per_rad,theta_deg,p1_minus_p2_bar,p1_plus_p2_bar,p1_bar,p2_bar,feasible\n";
    for (const auto& r : rows) {
        const double p1 = r.p1 / units::bar_to_pa;
        const double p2 = r.p2 / units::bar_to_pa;
        out << format9(r.stiffness) << ',' << format9(r.theta * units::rad_to_deg) << ','
            << format9(p1 - p2) << ',' << format9(p1 + p2) << ',' << format9(p1) << ','
            << format9(p2) << ',' << feasibility_name(r.tag) << '\n';
    }
    return out.str();
}

void write_sweep_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // fixed LF endings on every platform
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << format_sweep_csv(rows);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

} // namespace pam
