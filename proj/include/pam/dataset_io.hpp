#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pam/sweep.hpp"

// CSV ingestion of measured force curves and emission of sweep tables.
// Boundary units are bar/N/deg; values are converted to SI on load.

namespace pam {

struct ForceSample {
    double pressure_pa;
    double eps;
    double force_n;
    std::size_t row; // 1-based file row, for messages
};

struct ForceCurveDataset {
    std::string muscle_id;
    std::vector<ForceSample> samples;
};

// Expects the exact header `pressure_bar,contraction_ratio,force_N`,
// comma-separated numeric rows, LF or CRLF endings. Every malformed or
// invalid row is an IoError citing the row number; nothing is skipped
// silently.
ForceCurveDataset load_curve_csv(const std::filesystem::path& path);

// Header: stiffness_Nm_per_rad,theta_deg,p1_minus_p2_bar,p1_plus_p2_bar,
// p1_bar,p2_bar,feasible. Numbers carry 9 significant digits; row order is
// the table order (stiffness-major, theta-minor ascending), so repeated
// runs are byte-identical.
void write_sweep_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);

std::string format_sweep_csv(std::span<const SweepRow> rows);

} // namespace pam
