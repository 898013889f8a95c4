// Benchmark of the inverse-model sweep: serial reference loop vs the
// OpenMP kernel on a fine Festo grid, with a bitwise equality check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pam/sweep.hpp"
#include "pam/units.hpp"

namespace {

double run_ms(const char* label, const std::vector<pam::SweepRow>& rows,
              std::chrono::steady_clock::time_point t0, std::chrono::steady_clock::time_point t1) {
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::printf("%-8s %8.1f ms   (%zu rows)\n", label, ms, rows.size());
    return ms;
}

} // namespace

int main() {
    using namespace pam;

    const auto geom = MuscleGeometry::create(1.09e-2, 0.40, 25.5 * units::deg_to_rad);
    RationalFestoParams params;
    params.geometry = geom;
    params.c = 0.0;
    params.d = -10.5 * units::bar_to_pa;
    params.e = -779.099 * units::bar_to_pa * units::bar_to_pa;

    ActuatorConfig cfg;
    cfg.pulley_radius = 0.02;
    cfg.l0 = 0.40;
    cfg.eps0 = 0.1375;
    cfg.eps_threshold = 0.025;
    cfg.p_min = 0.0;
    cfg.p_max = 5.0 * units::bar_to_pa;

    // fine version of the published grid
    const SweepGrid grid{6.0,
                         9.0,
                         0.002,
                         -125.0 * units::deg_to_rad,
                         125.0 * units::deg_to_rad,
                         0.05 * units::deg_to_rad};
    std::printf("grid: %zu stiffness x %zu theta = %zu points\n", grid.k_count(),
                grid.theta_count(), grid.k_count() * grid.theta_count());
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both runs are serial\n");
#endif

    const auto t0 = std::chrono::steady_clock::now();
    const auto serial = sweep_inverse_serial(params, grid, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel = sweep_inverse(params, grid, cfg);
    const auto t2 = std::chrono::steady_clock::now();

    const double ms_serial = run_ms("serial", serial, t0, t1);
    const double ms_parallel = run_ms("openmp", parallel, t1, t2);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        const auto& a = serial[i];
        const auto& b = parallel[i];
        auto same = [](double x, double y) {
            return (std::isnan(x) && std::isnan(y)) || x == y;
        };
        identical = same(a.p1, b.p1) && same(a.p2, b.p2) && a.tag == b.tag &&
                    a.stiffness == b.stiffness && a.theta == b.theta;
    }
    std::printf("results identical: %s\n", identical ? "yes" : "NO");
    if (ms_parallel > 0.0) std::printf("speedup: %.2fx\n", ms_serial / ms_parallel);
    return identical ? 0 : 1;
}
