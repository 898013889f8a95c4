#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pam/dataset_io.hpp"
#include "pam/muscle_models.hpp"

// Parameter identification from datasheet anchors and measured curves.
// Fitting is anchor-based: the models are constructed to vanish exactly at
// the measured maximum-contraction points.

namespace pam {

struct ContractionAnchor {
    double pressure_pa; // > 0
    double eps_max;     // measured maximum contraction ratio in (0, 1)
};

struct GeometryMeasurement {
    double r_int; // internal radius from the datasheet, m
    double t0;    // inner tube wall thickness, m
    std::optional<double> f_max;// N, for braid-angle estimation
    std::optional<double> p_ref; // Pa
};

// r0 = r_int + t0/2 (braid assumed mid-wall).
double estimate_r0(const GeometryMeasurement& m);

// Solves (pi r0^2) P (a - b) = f_max for the braid angle:
// sin^2(alpha0) = 2/(3 + g) with g = f_max/(pi r0^2 P). Throws on g <= 0.
double estimate_alpha0(double f_max_n, double pressure_pa, double r0_m);

struct PolynomialFit {
    PolynomialFestoParams params;
    double condition_estimate; // 1-norm condition of the anchor matrix
    // f(eps) changes slope sign more than twice on [0, max eps_max]:
    // the interpolant is wandering between anchors.
    bool wandering_warning;
};

// Coefficients of f(eps) from the n x n anchor system
// [eps_i, eps_i^2, ..., eps_i^n] [a0..a_{n-1}]^T = (a-b) P_i.
// Throws SingularMatrixError (with the condition estimate) for duplicate
// or near-duplicate eps_max anchors.
PolynomialFit fit_polynomial_coeffs(std::span<const ContractionAnchor> anchors,
                                    const MuscleGeometry& geom);

// (d, e) from the two zero-force anchor constraints with c fixed:
// eps_max(P) (cP + e) = (a-b) P (P + d) at both anchors. Solved by direct
// elimination; Eq-form transcriptions are cross-checked in the tests.
RationalFestoParams fit_rational_params(const ContractionAnchor& anchor_i,
                                        const ContractionAnchor& anchor_ii, double c,
                                        const MuscleGeometry& geom);

// Advisory helper: scans c over a grid and returns the value minimizing the
// RMSE of the resulting model against the dataset. The paper selects c by
// hand; this is a convenience only.
double grid_search_c(const ContractionAnchor& anchor_i, const ContractionAnchor& anchor_ii,
                     const MuscleGeometry& geom, const ForceCurveDataset& data, double c_min,
                     double c_max, int steps);

// k(P_i) = eps_max_theoretical / eps_max(P_i), one entry per anchor.
KTable fit_k_table(std::span<const ContractionAnchor> anchors, const MuscleGeometry& geom);

struct FitReport {
    std::vector<double> residuals;            // F_model - F_measured, in-domain samples
    std::vector<std::size_t> residual_rows;   // file rows of those samples
    std::vector<std::size_t> out_of_domain_rows;
    double rmse;
    double max_abs_error;
};

// Residuals of a model against a measured curve. Out-of-domain samples are
// counted and reported, never silently dropped.
FitReport residual_report(const MuscleModel& model, const ForceCurveDataset& data);

// Partial-pivot elimination for the small anchor systems (n <= 6), with a
// 1-norm condition estimate.
std::vector<double> solve_linear_system(std::vector<std::vector<double>> matrix,
                                        std::vector<double> rhs, double* condition_out);

} // namespace pam
