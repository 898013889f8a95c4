#pragma once

#include <variant>
#include <vector>

#include "pam/actuator.hpp"

// Inverse-model sweeps over a (stiffness, joint angle) grid, the data-parallel
// kernel behind the pressure-map figures. Grid points are independent; the
// parallel kernel writes each row into its own slot, so serial and OpenMP
// runs produce identical tables.

namespace pam {

struct SweepGrid {
    double k_min;      // N.m/rad
    double k_max;      // N.m/rad
    double k_step;     // N.m/rad
    double theta_min;  // rad
    double theta_max;  // rad
    double theta_step; // rad

    std::size_t k_count() const;
    std::size_t theta_count() const;
    void validate() const; // throws DomainError on an empty grid
};

struct SweepRow {
    double stiffness; // N.m/rad
    double theta;     // rad
    double p1;        // Pa
    double p2;        // Pa
    Feasibility tag;
};

// Model selector: theoretical McKibben geometry or rational Festo parameters.
using SweepModel = std::variant<MuscleGeometry, RationalFestoParams>;

// Rows in deterministic order: stiffness-major, theta-minor, both ascending.
// Infeasible points are carried with their tag, never dropped.
std::vector<SweepRow> sweep_inverse_serial(const SweepModel& model, const SweepGrid& grid,
                                           const ActuatorConfig& cfg);

// OpenMP kernel; identical output to sweep_inverse_serial. Falls back to the
// serial loop when built without OpenMP.
std::vector<SweepRow> sweep_inverse(const SweepModel& model, const SweepGrid& grid,
                                    const ActuatorConfig& cfg);

} // namespace pam
