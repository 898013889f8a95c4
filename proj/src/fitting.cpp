#include "pam/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace pam {

double estimate_r0(const GeometryMeasurement& m) {
    if (!(m.r_int > 0.0)) throw DomainError("internal radius must be positive");
    if (!(m.t0 >= 0.0)) throw DomainError("wall thickness must be >= 0");
    return m.r_int + m.t0 / 2.0;
}

double estimate_alpha0(double f_max_n, double pressure_pa, double r0_m) {
    if (!(f_max_n > 0.0) || !(pressure_pa > 0.0) || !(r0_m > 0.0))
        throw DomainError("force, pressure and radius must be positive");
    const double g = f_max_n / (std::numbers::pi * r0_m * r0_m * pressure_pa);
    if (!(g > 0.0)) throw DomainError("infeasible force/pressure ratio (a - b would be <= 0)");
    return std::asin(std::sqrt(2.0 / (3.0 + g)));
}

std::vector<double> solve_linear_system(std::vector<std::vector<double>> m, std::vector<double> rhs,
                                        double* condition_out) {
    const std::size_t n = rhs.size();

    auto norm1 = [n](const std::vector<std::vector<double>>& a) {
        double best = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < n; ++i) col += std::abs(a[i][j]);
            best = std::max(best, col);
        }
        return best;
    };
    const double norm_a = norm1(m);

    // factor once; reuse for the inverse columns of the condition estimate
    auto factored = m;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(factored[r][col]) > std::abs(factored[piv][col])) piv = r;
        std::swap(factored[col], factored[piv]);
        std::swap(perm[col], perm[piv]);
        if (factored[col][col] == 0.0) {
            singular = true;
            break;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = factored[r][col] / factored[col][col];
            factored[r][col] = f;
            for (std::size_t k = col + 1; k < n; ++k) factored[r][k] -= f * factored[col][k];
        }
    }

    auto solve_factored = [&](std::vector<double> b) {
        std::vector<double> pb(n);
        for (std::size_t i = 0; i < n; ++i) pb[i] = b[perm[i]];
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t r = col + 1; r < n; ++r) pb[r] -= factored[r][col] * pb[col];
        for (std::size_t r = n; r-- > 0;) {
            for (std::size_t k = r + 1; k < n; ++k) pb[r] -= factored[r][k] * pb[k];
            pb[r] /= factored[r][r];
        }
        return pb;
    };

    double condition = std::numeric_limits<double>::infinity();
    if (!singular) {
        double norm_inv = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> unit(n, 0.0);
            unit[j] = 1.0;
            const auto col = solve_factored(unit);
            double sum = 0.0;
            for (double v : col) sum += std::abs(v);
            norm_inv = std::max(norm_inv, sum);
        }
        condition = norm_a * norm_inv;
    }
    if (condition_out) *condition_out = condition;

    if (singular || !std::isfinite(condition) || condition > 1e12)
        throw SingularMatrixError(
            "anchor system is singular or near-singular (condition estimate " +
                std::to_string(condition) + "); check for duplicate eps_max values",
            condition);

    return solve_factored(std::move(rhs));
}

PolynomialFit fit_polynomial_coeffs(std::span<const ContractionAnchor> anchors,
                                    const MuscleGeometry& geom) {
    if (anchors.empty()) throw DomainError("need at least one anchor");
    const std::size_t n = anchors.size();
    for (const auto& a : anchors)
        if (!(a.pressure_pa > 0.0) || !(a.eps_max > 0.0) || !(a.eps_max < 1.0))
            throw DomainError("anchors need P > 0 and eps_max in (0, 1)");

    const double ab = geom.a - geom.b;
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        double pw = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            pw *= anchors[i].eps_max;
            m[i][j] = pw;
        }
        rhs[i] = ab * anchors[i].pressure_pa;
    }

    PolynomialFit fit;
    fit.params.geometry = geom;
    fit.params.coeffs = solve_linear_system(std::move(m), std::move(rhs), &fit.condition_estimate);

    // slope sign changes of f(eps) on [0, max eps_max]
    double eps_top = 0.0;
    for (const auto& a : anchors) eps_top = std::max(eps_top, a.eps_max);
    const auto& cs = fit.params.coeffs;
    int changes = 0;
    int prev = 0;
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double eps = eps_top * i / samples;
        double slope = 0.0;
        for (std::size_t j = 1; j < cs.size(); ++j)
            slope += static_cast<double>(j) * cs[j] * std::pow(eps, static_cast<double>(j - 1));
        const int sign = slope > 0.0 ? 1 : (slope < 0.0 ? -1 : 0);
        if (sign != 0 && prev != 0 && sign != prev) ++changes;
        if (sign != 0) prev = sign;
    }
    fit.wandering_warning = changes > 2;
    return fit;
}

RationalFestoParams fit_rational_params(const ContractionAnchor& anchor_i,
                                        const ContractionAnchor& anchor_ii, double c,
                                        const MuscleGeometry& geom) {
    const double pi_ = anchor_i.pressure_pa;
    const double pii = anchor_ii.pressure_pa;
    const double ei = anchor_i.eps_max;
    const double eii = anchor_ii.eps_max;
    if (!(pi_ > 0.0) || !(pii > 0.0) || !(ei > 0.0) || !(eii > 0.0))
        throw DomainError("anchors need positive pressures and contractions");
    if (pi_ == pii) throw DomainError("anchors need distinct pressures");

    // zero-force constraints eps_max(P) (cP + e) = (a-b) P (P + d),
    // linear in (d, e): (a-b) P d - eps e = eps c P - (a-b) P^2
    const double ab = geom.a - geom.b;
    const double denom = eii * (ab * pi_) - ei * (ab * pii); // elimination pivot
    if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(ab * pi_ * eii)))
        throw PoleError("degenerate anchors: P_II - (eps_II/eps_I) P_I vanishes");

    std::vector<std::vector<double>> m{{ab * pi_, -ei}, {ab * pii, -eii}};
    std::vector<double> rhs{ei * c * pi_ - ab * pi_ * pi_, eii * c * pii - ab * pii * pii};
    const auto de = solve_linear_system(std::move(m), std::move(rhs), nullptr);

    RationalFestoParams out;
    out.geometry = geom;
    out.c = c;
    out.d = de[0];
    out.e = de[1];

    // verify the zero-force conditions rather than trusting the algebra
    for (const auto& a : {anchor_i, anchor_ii}) {
        const double lhs = a.eps_max * (c * a.pressure_pa + out.e);
        const double rhs2 = ab * a.pressure_pa * (a.pressure_pa + out.d);
        if (std::abs(lhs - rhs2) > 1e-6 * std::max(1.0, std::abs(rhs2)))
            throw DomainError("rational fit failed to reproduce its anchors");
    }
    return out;
}

double grid_search_c(const ContractionAnchor& anchor_i, const ContractionAnchor& anchor_ii,
                     const MuscleGeometry& geom, const ForceCurveDataset& data, double c_min,
                     double c_max, int steps) {
    if (steps < 1 || !(c_max >= c_min)) throw DomainError("bad c grid");
    double best_c = c_min;
    double best_rmse = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= steps; ++i) {
        const double c = c_min + (c_max - c_min) * i / steps;
        try {
            const auto params = fit_rational_params(anchor_i, anchor_ii, c, geom);
            const auto report = residual_report(MuscleModel{RationalFestoModel{params}}, data);
            if (report.rmse < best_rmse) {
                best_rmse = report.rmse;
                best_c = c;
            }
        } catch (const DomainError&) {
            // this c produces no usable fit; skip
        }
    }
    return best_c;
}

KTable fit_k_table(std::span<const ContractionAnchor> anchors, const MuscleGeometry& geom) {
    if (anchors.empty()) throw DomainError("need at least one anchor");
    KTable table;
    for (const auto& a : anchors) {
        if (!(a.eps_max > 0.0)) throw DomainError("anchor eps_max must be > 0");
        table.entries.emplace_back(a.pressure_pa, geom.eps_max_theoretical / a.eps_max);
    }
    std::sort(table.entries.begin(), table.entries.end());
    table.validate();
    return table;
}

FitReport residual_report(const MuscleModel& model, const ForceCurveDataset& data) {
    if (data.samples.empty()) throw DomainError("empty dataset");
    FitReport rep;
    rep.rmse = 0.0;
    rep.max_abs_error = 0.0;
    double sq_sum = 0.0;
    // wickramatunge evaluates in the stretched-length coordinate
    const WickramatungeParams* wick = nullptr;
    double ref_l0 = 0.0;
    if (const auto* rm = std::get_if<ReferenceModel>(&model)) {
        wick = std::get_if<WickramatungeParams>(&rm->spec);
        ref_l0 = rm->l0;
    }
    for (const auto& s : data.samples) {
        double predicted;
        const double coord = wick ? ref_l0 * (1.0 - s.eps) - wick->min_length : s.eps;
        try {
            predicted = muscle_force(model, coord, s.pressure_pa);
        } catch (const DomainError&) {
            rep.out_of_domain_rows.push_back(s.row);
            continue;
        }
        const double r = predicted - s.force_n;
        rep.residuals.push_back(r);
        rep.residual_rows.push_back(s.row);
        sq_sum += r * r;
        rep.max_abs_error = std::max(rep.max_abs_error, std::abs(r));
    }
    if (!rep.residuals.empty()) rep.rmse = std::sqrt(sq_sum / rep.residuals.size());
    return rep;
}

} // namespace pam
