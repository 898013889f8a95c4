#pragma once

#include <numbers>
#include <string_view>

#include "pam/errors.hpp"

// Unit conversions for the boundary formats (CLI flags, config files, CSV).
// Everything internal is SI: pascal, newton, meter, radian, N.m/rad.

namespace pam::units {

inline constexpr double bar_to_pa = 1.0e5;
inline constexpr double kpa_to_pa = 1.0e3;
inline constexpr double cm_to_m = 1.0e-2;
inline constexpr double mm_to_m = 1.0e-3;
inline constexpr double deg_to_rad = std::numbers::pi / 180.0;
inline constexpr double rad_to_deg = 180.0 / std::numbers::pi;

enum class Unit {
    pascal_,
    bar,
    kilopascal,
    meter,
    centimeter,
    millimeter,
    radian,
    degree,
    newton,
    newton_meter_per_radian,
};

enum class Dimension { pressure, length, angle, force, stiffness };

Dimension dimension_of(Unit u);

// Multiplier that takes a value in `u` to the SI unit of its dimension.
double si_factor(Unit u);

// Throws UsageError for spellings outside the supported set.
Unit parse_unit(std::string_view name);

// Linear rescaling within one dimension; throws DomainError on a
// dimension mismatch. Round trips are within 1 ulp.
double convert(double value, Unit from, Unit to);
double convert(double value, std::string_view from, std::string_view to);

} // namespace pam::units
