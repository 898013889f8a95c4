#pragma once

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "pam/geometry.hpp"

// Static contraction-force and stiffness evaluation for the nine muscle
// models. Forces are in newtons, pressures in pascals, contraction ratios
// dimensionless: eps = (l0 - l)/l0. Evaluation never clamps silently;
// out-of-domain inputs raise ContractionError carrying the violated bound.

namespace pam {

// Linear force-contraction law F = u*f_max*(1 - eps/eps_max).
struct HoganParams {
    double f_max;   // maximum isometric force at u = 1, eps = 0, N
    double eps_max; // contraction at which force vanishes
};

// Empirical k(P) factor: piecewise-linear between anchors, clamped at the
// ends. Entries sorted by strictly increasing pressure, k > 0.
struct KTable {
    std::vector<std::pair<double, double>> entries; // (pressure Pa, k)

    double k_at(double pressure_pa) const;
    void validate() const;
};

struct ModifiedMcKibbenParams {
    MuscleGeometry geometry;
    KTable k_table;
};

struct AndrikopoulosParams {
    MuscleGeometry geometry;
    double q; // in (0, 1]
    KTable k_table;
};

// F = pi*r0^2 * [(a-b)P - eps*(cP+e)/(P+d)], the three-parameter rational
// refinement of the theoretical model.
struct RationalFestoParams {
    MuscleGeometry geometry;
    double c; // Pa
    double d; // Pa
    double e; // Pa^2

    // contraction at which the force vanishes: (a-b)*P*(P+d)/(cP+e)
    double eps_max_at(double pressure_pa) const;
};

// F = pi*r0^2 * [(a-b)P - eps*(a0 + a1*eps + ...)], coefficients in Pa.
struct PolynomialFestoParams {
    MuscleGeometry geometry;
    std::vector<double> coeffs;

    double f_of_eps(double eps) const;
};

// Reference models for comparison plots and residual reports; the
// coefficients are user-supplied.
struct HildebrandtParams {
    std::array<double, 3> c; // f1(eps) = c0 + c1*eps + c2*eps^2
    std::array<double, 5> d; // f2(eps) = d0 + d1*eps + d2*eps^2 + d3*eps^3 + d4*eps^(2/3)
};

struct SarosiParams {
    std::array<double, 6> c; // F = (c1*exp(c6*eps) + c2*eps + c3)P - (c4*exp(c6*eps) - c5)
};

struct WickramatungeParams {
    std::array<double, 4> c; // K_M = c3*P^2 + c2*P*ls + c1*ls^2 + c0
    double min_length;       // m; stretched length ls = l - min_length
};

using ReferenceModelSpec = std::variant<HildebrandtParams, SarosiParams, WickramatungeParams>;

// Union variants. Models without geometry carry the initial length they
// need for stiffness in N/m.
struct HoganModel {
    HoganParams params;
    double l0; // m
};
struct TheoreticalMcKibbenModel {
    MuscleGeometry geometry;
};
struct ModifiedMcKibbenModel {
    ModifiedMcKibbenParams params;
};
struct AndrikopoulosModel {
    AndrikopoulosParams params;
};
struct RationalFestoModel {
    RationalFestoParams params;
};
struct PolynomialFestoModel {
    PolynomialFestoParams params;
};
struct ReferenceModel {
    ReferenceModelSpec spec;
    double l0; // m
};

using MuscleModel = std::variant<HoganModel, TheoreticalMcKibbenModel, ModifiedMcKibbenModel,
                                 AndrikopoulosModel, RationalFestoModel, PolynomialFestoModel,
                                 ReferenceModel>;

double hogan_force(double eps, double u, const HoganParams& p);
double theoretical_mckibben_force(double eps, double pressure_pa, const MuscleGeometry& g);
double modified_mckibben_force(double eps, double pressure_pa, const ModifiedMcKibbenParams& p);
double andrikopoulos_force(double eps, double pressure_pa, const AndrikopoulosParams& p);
double rational_festo_force(double eps, double pressure_pa, const RationalFestoParams& p);
double polynomial_festo_force(double eps, double pressure_pa, const PolynomialFestoParams& p);
// Wickramatunge takes the stretched length ls (m) in place of eps.
double reference_model_force(double eps_or_length, double pressure_pa,
                             const ReferenceModelSpec& spec);

// Unified evaluation. `control` is the activation u in [0,1] for Hogan and
// the pressure in Pa for everything else; the first argument is the
// stretched length for Wickramatunge and eps otherwise.
double muscle_force(const MuscleModel& model, double eps_or_length, double control);

// -dF/dl in N/m. Analytic for Hogan and RationalFesto (both constant in
// eps at fixed control), central finite difference for the rest.
// Hildebrandt stiffness is unbounded at eps -> 0; queries below eps = 1e-6
// raise DomainError.
double muscle_stiffness(const MuscleModel& model, double eps_or_length, double control);

// Initial length of the muscle behind a model variant, m.
double model_l0(const MuscleModel& model);

} // namespace pam
