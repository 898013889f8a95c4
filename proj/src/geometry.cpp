#include "pam/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pam {

BraidConstants derive_braid_constants(double alpha0_rad) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(alpha0_rad > 0.0) || !(alpha0_rad < half_pi))
        throw DomainError("braid angle must lie in (0 deg, 90 deg), got " +
                          std::to_string(alpha0_rad * 180.0 / std::numbers::pi) + " deg");
    const double t = std::tan(alpha0_rad);
    const double s = std::sin(alpha0_rad);
    const double a = 3.0 / (t * t);
    const double b = 1.0 / (s * s);
    return {a, b, 1.0 - std::sqrt(b / a)};
}

MuscleGeometry MuscleGeometry::create(double r0_m, double l0_m, double alpha0_rad) {
    if (!(r0_m > 0.0)) throw DomainError("muscle radius must be positive");
    if (!(l0_m > 0.0)) throw DomainError("muscle length must be positive");
    const BraidConstants bc = derive_braid_constants(alpha0_rad);
    MuscleGeometry g;
    g.r0 = r0_m;
    g.l0 = l0_m;
    g.alpha0 = alpha0_rad;
    g.a = bc.a;
    g.b = bc.b;
    g.eps_max_theoretical = bc.eps_max;
    return g;
}

double MuscleGeometry::cross_section() const {
    return std::numbers::pi * r0 * r0;
}

} // namespace pam
