#include "pam/sweep.hpp"

#include <cmath>
#include <limits>

namespace pam {

namespace {

std::size_t axis_count(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo) return 0;
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

SweepRow evaluate_point(const SweepModel& model, double stiffness, double theta,
                        const ActuatorConfig& cfg) {
    try {
        InverseSolution inv;
        if (const auto* geom = std::get_if<MuscleGeometry>(&model))
            inv = mckibben_inverse(theta, stiffness, 0.0, *geom, cfg);
        else
            inv = festo_inverse(theta, stiffness, std::get<RationalFestoParams>(model), cfg);
        return {stiffness, theta, inv.pressures.p1, inv.pressures.p2, inv.tag};
    } catch (const DomainError&) {
        // point cannot be evaluated at all (joint range, pole): keep the row
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {stiffness, theta, nan, nan, Feasibility::no_real_root};
    }
}

} // namespace

std::size_t SweepGrid::k_count() const { return axis_count(k_min, k_max, k_step); }
std::size_t SweepGrid::theta_count() const { return axis_count(theta_min, theta_max, theta_step); }

void SweepGrid::validate() const {
    if (k_count() == 0 || theta_count() == 0)
        throw DomainError("sweep grid is empty (check ranges and step signs)");
}

std::vector<SweepRow> sweep_inverse_serial(const SweepModel& model, const SweepGrid& grid,
                                           const ActuatorConfig& cfg) {
    grid.validate();
    cfg.validate();
    const std::size_t nk = grid.k_count();
    const std::size_t nt = grid.theta_count();
    std::vector<SweepRow> rows(nk * nt);
    for (std::size_t ik = 0; ik < nk; ++ik) {
        const double k = grid.k_min + static_cast<double>(ik) * grid.k_step;
        for (std::size_t it = 0; it < nt; ++it) {
            const double theta = grid.theta_min + static_cast<double>(it) * grid.theta_step;
            rows[ik * nt + it] = evaluate_point(model, k, theta, cfg);
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_inverse(const SweepModel& model, const SweepGrid& grid,
                                    const ActuatorConfig& cfg) {
    grid.validate();
    cfg.validate();
    const std::size_t nk = grid.k_count();
    const std::size_t nt = grid.theta_count();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(nk * nt);
    std::vector<SweepRow> rows(nk * nt);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const std::size_t ik = static_cast<std::size_t>(idx) / nt;
        const std::size_t it = static_cast<std::size_t>(idx) % nt;
        const double k = grid.k_min + static_cast<double>(ik) * grid.k_step;
        const double theta = grid.theta_min + static_cast<double>(it) * grid.theta_step;
        rows[static_cast<std::size_t>(idx)] = evaluate_point(model, k, theta, cfg);
    }
    return rows;
}

} // namespace pam
