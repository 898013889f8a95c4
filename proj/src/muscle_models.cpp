#include "pam/muscle_models.hpp"

#include <cmath>
#include <string>

namespace pam {

namespace {

void require_pressure(double pressure_pa) {
    if (!(pressure_pa >= 0.0))
        throw DomainError("control pressure must be >= 0, got " + std::to_string(pressure_pa) + " Pa");
}

void require_eps_range(double eps, double eps_max, const char* model) {
    if (!(eps >= 0.0) || eps > eps_max)
        throw ContractionError(std::string(model) + ": contraction " + std::to_string(eps) +
                                   " outside [0, " + std::to_string(eps_max) + "]",
                               eps, eps_max);
}

} // namespace

double KTable::k_at(double pressure_pa) const {
    validate();
    const auto& e = entries;
    if (pressure_pa <= e.front().first) return e.front().second;
    if (pressure_pa >= e.back().first) return e.back().second;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (pressure_pa <= e[i].first) {
            const double t = (pressure_pa - e[i - 1].first) / (e[i].first - e[i - 1].first);
            return e[i - 1].second + t * (e[i].second - e[i - 1].second);
        }
    }
    return e.back().second;
}

void KTable::validate() const {
    if (entries.empty()) throw DomainError("k-table must have at least one entry");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].second > 0.0)) throw DomainError("k-table values must be positive");
        if (i > 0 && !(entries[i].first > entries[i - 1].first))
            throw DomainError("k-table pressures must be strictly increasing");
    }
}

double RationalFestoParams::eps_max_at(double pressure_pa) const {
    const double denom = c * pressure_pa + e;
    if (denom == 0.0) throw PoleError("rational model: cP + e vanishes");
    return (geometry.a - geometry.b) * pressure_pa * (pressure_pa + d) / denom;
}

double PolynomialFestoParams::f_of_eps(double eps) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * eps + coeffs[i];
    return acc;
}

double hogan_force(double eps, double u, const HoganParams& p) {
    if (!(u >= 0.0) || u > 1.0)
        throw DomainError("activation u must lie in [0, 1], got " + std::to_string(u));
    require_eps_range(eps, p.eps_max, "hogan");
    return u * p.f_max * (1.0 - eps / p.eps_max);
}

double theoretical_mckibben_force(double eps, double pressure_pa, const MuscleGeometry& g) {
    require_pressure(pressure_pa);
    require_eps_range(eps, g.eps_max_theoretical, "theoretical mckibben");
    const double w = 1.0 - eps;
    return g.cross_section() * pressure_pa * (g.a * w * w - g.b);
}

double modified_mckibben_force(double eps, double pressure_pa, const ModifiedMcKibbenParams& p) {
    require_pressure(pressure_pa);
    const auto& tab = p.k_table.entries;
    p.k_table.validate();
    if (tab.size() > 1 &&
        (pressure_pa < tab.front().first || pressure_pa > tab.back().first))
        throw DomainError("pressure " + std::to_string(pressure_pa) +
                          " Pa outside the k-table span [" + std::to_string(tab.front().first) +
                          ", " + std::to_string(tab.back().first) + "]");
    const double k = p.k_table.k_at(pressure_pa);
    const double eps_max = p.geometry.eps_max_theoretical / k;
    require_eps_range(eps, eps_max, "modified mckibben");
    const double w = 1.0 - k * eps;
    return p.geometry.cross_section() * pressure_pa * (p.geometry.a * w * w - p.geometry.b);
}

double andrikopoulos_force(double eps, double pressure_pa, const AndrikopoulosParams& p) {
    if (!(p.q > 0.0) || p.q > 1.0)
        throw DomainError("q-parameter must lie in (0, 1], got " + std::to_string(p.q));
    return p.q * modified_mckibben_force(eps, pressure_pa, {p.geometry, p.k_table});
}

double rational_festo_force(double eps, double pressure_pa, const RationalFestoParams& p) {
    require_pressure(pressure_pa);
    const double denom = pressure_pa + p.d;
    if (std::abs(denom) < 1e-9 * std::max(1.0, std::abs(p.d)))
        throw PoleError("rational model: P + d within tolerance of zero");
    const double eps_max = p.eps_max_at(pressure_pa);
    require_eps_range(eps, eps_max, "rational festo");
    const double g = (p.c * pressure_pa + p.e) / denom;
    const double ab = p.geometry.a - p.geometry.b;
    return p.geometry.cross_section() * (ab * pressure_pa - eps * g);
}

double polynomial_festo_force(double eps, double pressure_pa, const PolynomialFestoParams& p) {
    require_pressure(pressure_pa);
    if (!(eps >= 0.0)) throw DomainError("contraction must be >= 0");
    if (p.coeffs.empty()) throw DomainError("polynomial model needs at least one coefficient");
    const double ab = p.geometry.a - p.geometry.b;
    return p.geometry.cross_section() * (ab * pressure_pa - eps * p.f_of_eps(eps));
}

double reference_model_force(double eps_or_length, double pressure_pa,
                             const ReferenceModelSpec& spec) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HildebrandtParams>) {
                const double eps = eps_or_length;
                if (!(eps >= 0.0)) throw DomainError("contraction must be >= 0");
                const double f1 = m.c[0] + m.c[1] * eps + m.c[2] * eps * eps;
                const double f2 = m.d[0] + m.d[1] * eps + m.d[2] * eps * eps +
                                  m.d[3] * eps * eps * eps + m.d[4] * std::cbrt(eps * eps);
                return f1 * pressure_pa - f2;
            } else if constexpr (std::is_same_v<T, SarosiParams>) {
                const double eps = eps_or_length;
                const double ex = std::exp(m.c[5] * eps);
                return (m.c[0] * ex + m.c[1] * eps + m.c[2]) * pressure_pa - (m.c[3] * ex - m.c[4]);
            } else {
                const double ls = eps_or_length;
                if (!(ls >= 0.0)) throw DomainError("stretched length must be >= 0");
                const double km = m.c[3] * pressure_pa * pressure_pa + m.c[2] * pressure_pa * ls +
                                  m.c[1] * ls * ls + m.c[0];
                return km * ls;
            }
        },
        spec);
}

double muscle_force(const MuscleModel& model, double eps_or_length, double control) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HoganModel>)
                return hogan_force(eps_or_length, control, m.params);
            else if constexpr (std::is_same_v<T, TheoreticalMcKibbenModel>)
                return theoretical_mckibben_force(eps_or_length, control, m.geometry);
            else if constexpr (std::is_same_v<T, ModifiedMcKibbenModel>)
                return modified_mckibben_force(eps_or_length, control, m.params);
            else if constexpr (std::is_same_v<T, AndrikopoulosModel>)
                return andrikopoulos_force(eps_or_length, control, m.params);
            else if constexpr (std::is_same_v<T, RationalFestoModel>)
                return rational_festo_force(eps_or_length, control, m.params);
            else if constexpr (std::is_same_v<T, PolynomialFestoModel>)
                return polynomial_festo_force(eps_or_length, control, m.params);
            else
                return reference_model_force(eps_or_length, control, m.spec);
        },
        model);
}

double model_l0(const MuscleModel& model) {
    return std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HoganModel>)
                return m.l0;
            else if constexpr (std::is_same_v<T, TheoreticalMcKibbenModel>)
                return m.geometry.l0;
            else if constexpr (std::is_same_v<T, ModifiedMcKibbenModel>)
                return m.params.geometry.l0;
            else if constexpr (std::is_same_v<T, AndrikopoulosModel>)
                return m.params.geometry.l0;
            else if constexpr (std::is_same_v<T, RationalFestoModel>)
                return m.params.geometry.l0;
            else if constexpr (std::is_same_v<T, PolynomialFestoModel>)
                return m.params.geometry.l0;
            else
                return m.l0;
        },
        model);
}

namespace {

// -dF/dl by central difference in eps: K = -(F(eps+h) - F(eps-h)) / (2h*l0).
double fd_stiffness_eps(const MuscleModel& model, double eps, double control, double l0) {
    const double h = 1e-6 * std::max(1.0, std::abs(eps));
    double fp, fm;
    try {
        fp = muscle_force(model, eps + h, control);
        fm = muscle_force(model, eps - h, control);
    } catch (const DomainError&) {
        throw DomainError("stiffness stencil crosses the model domain boundary at eps = " +
                          std::to_string(eps));
    }
    return -(fp - fm) / (2.0 * h * l0);
}

} // namespace

double muscle_stiffness(const MuscleModel& model, double eps_or_length, double control) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HoganModel>) {
                if (!(control >= 0.0) || control > 1.0)
                    throw DomainError("activation u must lie in [0, 1]");
                return control * m.params.f_max / (m.l0 * m.params.eps_max);
            } else if constexpr (std::is_same_v<T, RationalFestoModel>) {
                const auto& p = m.params;
                const double denom = control + p.d;
                if (std::abs(denom) < 1e-9 * std::max(1.0, std::abs(p.d)))
                    throw PoleError("rational model: P + d within tolerance of zero");
                // Independent of eps at fixed pressure.
                return p.geometry.cross_section() / p.geometry.l0 *
                       ((p.c * control + p.e) / denom);
            } else if constexpr (std::is_same_v<T, ReferenceModel>) {
                if (std::holds_alternative<WickramatungeParams>(m.spec)) {
                    // native coordinate is length: K = +dF/dls
                    const double ls = eps_or_length;
                    const double h = 1e-6 * std::max(1.0, std::abs(ls));
                    if (ls - h < 0.0)
                        throw DomainError("stiffness stencil crosses ls = 0");
                    const double fp = reference_model_force(ls + h, control, m.spec);
                    const double fm = reference_model_force(ls - h, control, m.spec);
                    return (fp - fm) / (2.0 * h);
                }
                if (std::holds_alternative<HildebrandtParams>(m.spec) && eps_or_length < 1e-6)
                    throw DomainError(
                        "hildebrandt stiffness is unbounded at zero contraction; eps must be >= 1e-6");
                return fd_stiffness_eps(model, eps_or_length, control, m.l0);
            } else {
                return fd_stiffness_eps(model, eps_or_length, control, model_l0(model));
            }
        },
        model);
}

} // namespace pam
