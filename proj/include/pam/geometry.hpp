#pragma once

#include "pam/errors.hpp"

namespace pam {

// Braid constants of the cylindrical McKibben model:
//   a = 3/tan^2(alpha0), b = 1/sin^2(alpha0), eps_max = 1 - sqrt(b/a).
// eps_max > 0 requires alpha0 below the magic angle 54.7356 deg (a = b).
struct BraidConstants {
    double a;
    double b;
    double eps_max;
};

// Throws DomainError unless 0 < alpha0 < 90 deg. eps_max <= 0 is returned
// as-is; the caller decides whether that is an error.
BraidConstants derive_braid_constants(double alpha0_rad);

// Initial muscle geometry (SI). The braid constants are computed once at
// construction; every force evaluation uses them.
struct MuscleGeometry {
    double r0 = 0.0;     // initial radius, m
    double l0 = 0.0;     // initial active length, m
    double alpha0 = 0.0; // initial braid angle, rad

    double a = 0.0;
    double b = 0.0;
    double eps_max_theoretical = 0.0;

    static MuscleGeometry create(double r0_m, double l0_m, double alpha0_rad);

    double cross_section() const; // pi*r0^2
};

} // namespace pam
