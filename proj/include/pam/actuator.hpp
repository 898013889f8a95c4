#pragma once

#include <utility>

#include "pam/muscle_models.hpp"

// Static models of the pulley antagonist actuator: two identical muscles
// on a pulley of radius R, contraction ratios eps1 = eps0 + R*theta/l0 and
// eps2 = eps0 - R*theta/l0 (muscle 1 contracts as theta grows). Torque in
// N.m, stiffness K = -dT/dtheta in N.m/rad.

namespace pam {

struct ActuatorConfig {
    double pulley_radius = 0.0;   // R, m
    double l0 = 0.0;              // initial muscle length, m (both muscles)
    double eps0 = 0.0;            // initial contraction of both muscles
    double eps_threshold = 0.025; // minimum allowed contraction
    double p_min = 0.0;           // Pa
    double p_max = 5.0e5;         // Pa

    void validate() const;
};

struct PressurePair {
    double p1; // agonist (muscle 1), Pa
    double p2; // antagonist, Pa
};

struct TorqueStiffness {
    double torque;    // N.m
    double stiffness; // N.m/rad
};

enum class Feasibility { feasible, clipped_infeasible, no_real_root };

const char* feasibility_name(Feasibility f);

struct InverseSolution {
    PressurePair pressures{0.0, 0.0};
    Feasibility tag = Feasibility::no_real_root;
    double torque_residual = 0.0;    // |T_achieved - T_requested|
    double stiffness_residual = 0.0; // |K_achieved - K_requested|
};

// eps1 = eps0 + R*theta/l0, eps2 = eps0 - R*theta/l0. Errors when a
// contraction would cross eps_threshold (|theta| beyond joint_limits).
std::pair<double, double> contraction_ratios(double theta, const ActuatorConfig& cfg);

// Symmetric limits theta_max = -theta_min = (l0/R)*(eps0 - eps_threshold).
std::pair<double, double> joint_limits(const ActuatorConfig& cfg);

// --- Hogan actuator -------------------------------------------------------

TorqueStiffness hogan_direct(double u1, double u2, double theta, const HoganParams& hp,
                             const ActuatorConfig& cfg);

double hogan_equilibrium(double u1, double u2, const HoganParams& hp, const ActuatorConfig& cfg);

struct HoganInverse {
    double u1 = 0.0;
    double u2 = 0.0;
    Feasibility tag = Feasibility::clipped_infeasible;
    double u1_clipped = 0.0; // suggestion clamped to [0, 1]
    double u2_clipped = 0.0;
};

HoganInverse hogan_inverse(double theta_equ, double stiffness, const HoganParams& hp,
                           const ActuatorConfig& cfg);

// --- Theoretical McKibben actuator ----------------------------------------

TorqueStiffness mckibben_direct(const PressurePair& pp, double theta, const MuscleGeometry& geom,
                                const ActuatorConfig& cfg);

// Closed-form inverse: (P1 - P2) from the torque equation, (P1 + P2) from
// the stiffness equation. Arbitrary target torque supported (default 0).
InverseSolution mckibben_inverse(double theta, double stiffness, double torque,
                                 const MuscleGeometry& geom, const ActuatorConfig& cfg);

// --- Festo (rational model) actuator ---------------------------------------

TorqueStiffness festo_direct(const PressurePair& pp, double theta, const RationalFestoParams& p,
                             const ActuatorConfig& cfg);

// Equilibrium angle where the two muscle torques cancel.
double festo_equilibrium(const PressurePair& pp, const RationalFestoParams& p,
                         const ActuatorConfig& cfg);

// Equilibrium inverse (T = 0) via the closed-form cubic in
// m = (P1+d)(P2+d); requires the fitted c = 0 case. Every candidate root
// is screened through the pressure box and contraction domain and verified
// by a forward evaluation.
InverseSolution festo_inverse(double theta_equ, double stiffness, const RationalFestoParams& p,
                              const ActuatorConfig& cfg);

// eps0 = eps_max(p_max) / 2.
double init_contraction(const RationalFestoParams& p, const ActuatorConfig& cfg);

// Torque/stiffness without domain screening; used for forward verification
// of inverse candidates and equilibrium identities.
TorqueStiffness festo_direct_unchecked(const PressurePair& pp, double theta,
                                       const RationalFestoParams& p, const ActuatorConfig& cfg);
TorqueStiffness mckibben_direct_unchecked(const PressurePair& pp, double theta,
                                          const MuscleGeometry& geom, const ActuatorConfig& cfg);

} // namespace pam
