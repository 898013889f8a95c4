#include "pam/actuator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pam/cubic.hpp"
#include "pam/units.hpp"

namespace pam {

namespace {

constexpr double theta_tol = 1e-12;

void require_theta_in_range(double theta, const ActuatorConfig& cfg) {
    const auto [lo, hi] = joint_limits(cfg);
    if (theta < lo - theta_tol || theta > hi + theta_tol)
        throw DomainError("joint angle " + std::to_string(theta) + " rad outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "] rad (contraction would cross eps_threshold)");
}

void require_pressure_in_box(double pressure_pa, const ActuatorConfig& cfg) {
    const double tol = 1e-9 * std::max(1.0, cfg.p_max);
    if (pressure_pa < cfg.p_min - tol || pressure_pa > cfg.p_max + tol)
        throw DomainError("pressure " + std::to_string(pressure_pa) + " Pa outside the box [" +
                          std::to_string(cfg.p_min) + ", " + std::to_string(cfg.p_max) + "]");
}

} // namespace

void ActuatorConfig::validate() const {
    if (!(pulley_radius > 0.0)) throw DomainError("pulley radius must be positive");
    if (!(l0 > 0.0)) throw DomainError("muscle length must be positive");
    if (!(eps_threshold >= 0.0) || !(eps_threshold < eps0))
        throw DomainError("need 0 <= eps_threshold < eps0");
    if (!(p_min < p_max)) throw DomainError("need p_min < p_max");
}

const char* feasibility_name(Feasibility f) {
    switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::clipped_infeasible: return "clipped_infeasible";
    case Feasibility::no_real_root: return "no_real_root";
    }
    return "?";
}

std::pair<double, double> contraction_ratios(double theta, const ActuatorConfig& cfg) {
    cfg.validate();
    require_theta_in_range(theta, cfg);
    const double x = cfg.pulley_radius * theta / cfg.l0;
    return {cfg.eps0 + x, cfg.eps0 - x};
}

std::pair<double, double> joint_limits(const ActuatorConfig& cfg) {
    const double theta_max = (cfg.l0 / cfg.pulley_radius) * (cfg.eps0 - cfg.eps_threshold);
    return {-theta_max, theta_max};
}

// --- Hogan ------------------------------------------------------------------

TorqueStiffness hogan_direct(double u1, double u2, double theta, const HoganParams& hp,
                             const ActuatorConfig& cfg) {
    cfg.validate();
    if (!(u1 >= 0.0) || u1 > 1.0 || !(u2 >= 0.0) || u2 > 1.0)
        throw DomainError("activations must lie in [0, 1]");
    const auto [eps1, eps2] = contraction_ratios(theta, cfg);
    if (eps1 > hp.eps_max || eps2 > hp.eps_max)
        throw ContractionError("hogan actuator: contraction beyond eps_max",
                               std::max(eps1, eps2), hp.eps_max);
    const double R = cfg.pulley_radius;
    const double T = R * hp.f_max *
                     ((1.0 - cfg.eps0 / hp.eps_max) * (u1 - u2) -
                      (R * theta / (cfg.l0 * hp.eps_max)) * (u1 + u2));
    const double K = R * R * hp.f_max / (cfg.l0 * hp.eps_max) * (u1 + u2);
    return {T, K};
}

double hogan_equilibrium(double u1, double u2, const HoganParams& hp, const ActuatorConfig& cfg) {
    cfg.validate();
    if (!(u1 + u2 > 0.0)) throw DomainError("hogan equilibrium needs u1 + u2 > 0");
    const double R = cfg.pulley_radius;
    const double K = R * R * hp.f_max / (cfg.l0 * hp.eps_max) * (u1 + u2);
    return (1.0 - cfg.eps0 / hp.eps_max) * R * hp.f_max * (u1 - u2) / K;
}

HoganInverse hogan_inverse(double theta_equ, double stiffness, const HoganParams& hp,
                           const ActuatorConfig& cfg) {
    cfg.validate();
    const double R = cfg.pulley_radius;
    const double sum = stiffness * cfg.l0 * hp.eps_max / (R * R * hp.f_max);
    const double diff = theta_equ * stiffness / ((1.0 - cfg.eps0 / hp.eps_max) * R * hp.f_max);

    HoganInverse sol;
    sol.u1 = (sum + diff) / 2.0;
    sol.u2 = (sum - diff) / 2.0;
    sol.u1_clipped = std::clamp(sol.u1, 0.0, 1.0);
    sol.u2_clipped = std::clamp(sol.u2, 0.0, 1.0);

    const auto [lo, hi] = joint_limits(cfg);
    const bool theta_ok = theta_equ >= lo - theta_tol && theta_equ <= hi + theta_tol;
    const double u_tol = 1e-12;
    const bool u_ok = sum > 0.0 && sum <= 2.0 + u_tol && sol.u1 >= -u_tol &&
                      sol.u1 <= 1.0 + u_tol && sol.u2 >= -u_tol && sol.u2 <= 1.0 + u_tol;
    sol.tag = (theta_ok && u_ok) ? Feasibility::feasible : Feasibility::clipped_infeasible;
    return sol;
}

// --- Theoretical McKibben ----------------------------------------------------

TorqueStiffness mckibben_direct_unchecked(const PressurePair& pp, double theta,
                                          const MuscleGeometry& geom, const ActuatorConfig& cfg) {
    const double R = cfg.pulley_radius;
    const double x = R * theta / cfg.l0;
    const double w = 1.0 - cfg.eps0;
    const double s = geom.cross_section();
    const double T = s * R *
                     ((geom.a * (w * w + x * x) - geom.b) * (pp.p1 - pp.p2) -
                      2.0 * geom.a * w * x * (pp.p1 + pp.p2));
    const double K = 2.0 * geom.a * s * R * R / cfg.l0 * (w * (pp.p1 + pp.p2) - x * (pp.p1 - pp.p2));
    return {T, K};
}

TorqueStiffness mckibben_direct(const PressurePair& pp, double theta, const MuscleGeometry& geom,
                                const ActuatorConfig& cfg) {
    cfg.validate();
    require_pressure_in_box(pp.p1, cfg);
    require_pressure_in_box(pp.p2, cfg);
    const auto [eps1, eps2] = contraction_ratios(theta, cfg);
    if (eps1 > geom.eps_max_theoretical || eps2 > geom.eps_max_theoretical)
        throw ContractionError("mckibben actuator: contraction beyond eps_max",
                               std::max(eps1, eps2), geom.eps_max_theoretical);
    return mckibben_direct_unchecked(pp, theta, geom, cfg);
}

InverseSolution mckibben_inverse(double theta, double stiffness, double torque,
                                 const MuscleGeometry& geom, const ActuatorConfig& cfg) {
    cfg.validate();
    const double R = cfg.pulley_radius;
    const double x = R * theta / cfg.l0;
    const double w = 1.0 - cfg.eps0;
    const double f = geom.a * (w * w - x * x) - geom.b;
    if (std::abs(f) < 1e-12 * std::max(1.0, geom.a))
        throw PoleError("mckibben inverse: f(theta) within tolerance of zero");
    const double s = geom.cross_section();
    const double A = 2.0 * geom.a * s * R * R * w / cfg.l0;

    const double diff = (torque + stiffness * theta) / (s * R * f);
    const double sum =
        (stiffness + (2.0 * geom.a * R * R * theta / (cfg.l0 * cfg.l0 * f)) * (torque + stiffness * theta)) / A;

    InverseSolution sol;
    sol.pressures = {(sum + diff) / 2.0, (sum - diff) / 2.0};

    const auto ts = mckibben_direct_unchecked(sol.pressures, theta, geom, cfg);
    sol.torque_residual = std::abs(ts.torque - torque);
    sol.stiffness_residual = std::abs(ts.stiffness - stiffness);

    const double ptol = 1e-9 * std::max(1.0, cfg.p_max);
    const bool box_ok = sol.pressures.p1 >= cfg.p_min - ptol && sol.pressures.p1 <= cfg.p_max + ptol &&
                        sol.pressures.p2 >= cfg.p_min - ptol && sol.pressures.p2 <= cfg.p_max + ptol;
    const double eps1 = cfg.eps0 + x;
    const double eps2 = cfg.eps0 - x;
    const double ctol = 1e-12;
    const bool eps_ok = eps1 >= cfg.eps_threshold - ctol && eps2 >= cfg.eps_threshold - ctol &&
                        eps1 <= geom.eps_max_theoretical + ctol &&
                        eps2 <= geom.eps_max_theoretical + ctol;
    const bool taut = sum > 0.0; // K <= 0 would need a non-positive pressure sum
    sol.tag = (box_ok && eps_ok && taut) ? Feasibility::feasible : Feasibility::clipped_infeasible;
    return sol;
}

// --- Festo (rational model) ---------------------------------------------------

namespace {

double rational_g(double pressure_pa, const RationalFestoParams& p) {
    const double denom = pressure_pa + p.d;
    if (std::abs(denom) < 1e-9 * std::max(1.0, std::abs(p.d)))
        throw PoleError("rational model: P + d within tolerance of zero");
    return (p.c * pressure_pa + p.e) / denom;
}

} // namespace

TorqueStiffness festo_direct_unchecked(const PressurePair& pp, double theta,
                                       const RationalFestoParams& p, const ActuatorConfig& cfg) {
    const double R = cfg.pulley_radius;
    const double x = R * theta / cfg.l0;
    const double g1 = rational_g(pp.p1, p);
    const double g2 = rational_g(pp.p2, p);
    const double s = p.geometry.cross_section();
    const double ab = p.geometry.a - p.geometry.b;
    const double T = s * R * (ab * (pp.p1 - pp.p2) - cfg.eps0 * (g1 - g2) - x * (g1 + g2));
    const double K = s * R * R / cfg.l0 * (g1 + g2);
    return {T, K};
}

TorqueStiffness festo_direct(const PressurePair& pp, double theta, const RationalFestoParams& p,
                             const ActuatorConfig& cfg) {
    cfg.validate();
    require_pressure_in_box(pp.p1, cfg);
    require_pressure_in_box(pp.p2, cfg);
    const auto [eps1, eps2] = contraction_ratios(theta, cfg);
    const double em1 = p.eps_max_at(pp.p1);
    const double em2 = p.eps_max_at(pp.p2);
    if (eps1 > em1) throw ContractionError("festo actuator: muscle 1 beyond eps_max(P1)", eps1, em1);
    if (eps2 > em2) throw ContractionError("festo actuator: muscle 2 beyond eps_max(P2)", eps2, em2);
    return festo_direct_unchecked(pp, theta, p, cfg);
}

double festo_equilibrium(const PressurePair& pp, const RationalFestoParams& p,
                         const ActuatorConfig& cfg) {
    cfg.validate();
    const double u = pp.p1 + p.d;
    const double v = pp.p2 + p.d;
    const double m = u * v;
    const double s = u + v;
    const double ab = p.geometry.a - p.geometry.b;
    const double e_eff = p.e - p.c * p.d; // g_i = c + e_eff/(P_i + d)
    const double denom = 2.0 * p.c * m + e_eff * s;
    if (std::abs(denom) < 1e-9 * std::max(1.0, std::abs(p.e)))
        throw PoleError("festo equilibrium: degenerate denominator");
    const double x = (pp.p1 - pp.p2) * (ab * m + cfg.eps0 * e_eff) / denom;
    return cfg.l0 / cfg.pulley_radius * x;
}

InverseSolution festo_inverse(double theta_equ, double stiffness, const RationalFestoParams& p,
                              const ActuatorConfig& cfg) {
    cfg.validate();
    if (p.c != 0.0)
        throw DomainError("festo inverse is implemented for the fitted c = 0 case only");
    if (!(stiffness > 0.0)) throw DomainError("requested stiffness must be positive");
    require_theta_in_range(theta_equ, cfg);

    // Scale to bar units so the cubic coefficients stay well conditioned.
    const double PB = units::bar_to_pa;
    const double d_b = p.d / PB;
    const double e_b = p.e / (PB * PB);
    const double ab = p.geometry.a - p.geometry.b;
    const double A_b = p.geometry.cross_section() * cfg.pulley_radius * cfg.pulley_radius *
                       e_b / cfg.l0 * PB; // K = A_b * (1/u_bar + 1/v_bar)
    const double x = cfg.pulley_radius * theta_equ / cfg.l0;

    const double ka = stiffness / A_b; // s = ka * m
    const double kappa = ka * ka;
    const double beta = ab / e_b;

    // x^2*kappa*m = (kappa*m - 4) * (eps0 + beta*m)^2, monic in m
    const CubicCoefficients cc{
        2.0 * cfg.eps0 / beta - 4.0 / kappa,
        cfg.eps0 * cfg.eps0 / (beta * beta) - 8.0 * cfg.eps0 / (beta * kappa) -
            x * x / (beta * beta),
        -4.0 * cfg.eps0 * cfg.eps0 / (kappa * beta * beta),
    };
    const CubicRoots roots = solve_cubic(cc);

    struct Candidate {
        PressurePair pp;
        double residual;
        bool admissible;
        double t_res;
        double k_res;
    };
    std::vector<Candidate> cands;

    const double eps1 = cfg.eps0 + x;
    const double eps2 = cfg.eps0 - x;
    const double ptol = 1e-9 * std::max(1.0, cfg.p_max);

    for (int i = 0; i < roots.count; ++i) {
        const double m = roots.roots[i];
        const double s = ka * m;
        const double disc = s * s - 4.0 * m;
        if (disc < -1e-12 * std::max(1.0, s * s)) continue; // complex (u, v)
        // The equilibrium constraint gives delta = x*s/B exactly, and keeps
        // full precision where s^2 - 4m cancels (theta near 0). B ~ 0 marks
        // the spurious root of the squared factor; fall back to the radical
        // there. sign(P1 - P2) follows sign(theta) either way.
        const double B = cfg.eps0 + beta * m;
        const double delta = std::abs(B) > 1e-9
                                 ? x * s / B
                                 : std::copysign(std::sqrt(std::max(0.0, disc)), x);
        const double u = (s + delta) / 2.0;
        const double v = (s - delta) / 2.0;
        const PressurePair pp{(u - d_b) * PB, (v - d_b) * PB};
        if (!std::isfinite(pp.p1) || !std::isfinite(pp.p2)) continue;

        double t_res, k_res;
        try {
            const auto ts = festo_direct_unchecked(pp, theta_equ, p, cfg);
            t_res = std::abs(ts.torque);
            k_res = std::abs(ts.stiffness - stiffness);
        } catch (const PoleError&) {
            continue;
        }

        bool admissible = pp.p1 >= cfg.p_min - ptol && pp.p1 <= cfg.p_max + ptol &&
                          pp.p2 >= cfg.p_min - ptol && pp.p2 <= cfg.p_max + ptol;
        if (admissible) {
            try {
                const double ctol = 1e-12;
                admissible = eps1 <= p.eps_max_at(pp.p1) + ctol && eps2 <= p.eps_max_at(pp.p2) + ctol;
            } catch (const PoleError&) {
                admissible = false;
            }
        }
        cands.push_back({pp, t_res + k_res, admissible, t_res, k_res});
    }

    InverseSolution sol;
    if (cands.empty()) {
        sol.tag = Feasibility::no_real_root;
        return sol;
    }

    auto better = [](const Candidate& lhs, const Candidate& rhs) {
        const double tol = 1e-12 * std::max({1.0, lhs.residual, rhs.residual});
        if (std::abs(lhs.residual - rhs.residual) > tol) return lhs.residual < rhs.residual;
        return lhs.pp.p1 + lhs.pp.p2 < rhs.pp.p1 + rhs.pp.p2; // lower energy
    };

    const Candidate* best = nullptr;
    for (const auto& cand : cands) {
        if (!cand.admissible) continue;
        if (!best || better(cand, *best)) best = &cand;
    }
    if (best) {
        sol.tag = Feasibility::feasible;
    } else {
        for (const auto& cand : cands)
            if (!best || better(cand, *best)) best = &cand;
        sol.tag = Feasibility::clipped_infeasible;
    }
    sol.pressures = best->pp;
    sol.torque_residual = best->t_res;
    sol.stiffness_residual = best->k_res;
    return sol;
}

double init_contraction(const RationalFestoParams& p, const ActuatorConfig& cfg) {
    return p.eps_max_at(cfg.p_max) / 2.0;
}

} // namespace pam
