#include "pam/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pam/errors.hpp"

namespace pam {

double evaluate_cubic(const CubicCoefficients& c, double x) {
    return ((x + c.a2) * x + c.a1) * x + c.a0;
}

namespace {

double cubic_derivative(const CubicCoefficients& c, double x) {
    return (3.0 * x + 2.0 * c.a2) * x + c.a1;
}

double newton_polish(const CubicCoefficients& c, double x) {
    const double f = evaluate_cubic(c, x);
    const double fp = cubic_derivative(c, x);
    if (fp == 0.0) return x;
    const double x1 = x - f / fp;
    if (!std::isfinite(x1)) return x;
    return std::abs(evaluate_cubic(c, x1)) <= std::abs(f) ? x1 : x;
}

} // namespace

CubicRoots solve_cubic(const CubicCoefficients& c) {
    if (!std::isfinite(c.a2) || !std::isfinite(c.a1) || !std::isfinite(c.a0))
        throw DomainError("cubic coefficients must be finite");

    const double p = c.a1 - c.a2 * c.a2 / 3.0;
    const double q = c.a0 - c.a1 * c.a2 / 3.0 + 2.0 * c.a2 * c.a2 * c.a2 / 27.0;
    const double D = q * q / 4.0 + p * p * p / 27.0;
    const double shift = c.a2 / 3.0;

    CubicRoots out;
    out.discriminant = D;

    const double d_tol = 1e-12 * std::max({1.0, q * q, std::abs(p * p * p)});

    if (std::abs(D) <= d_tol) {
        out.branch = CubicBranch::multiple;
        if (p == 0.0 && q == 0.0) {
            out.roots[0] = -shift; // triple root
            out.count = 1;
        } else if (p == 0.0) {
            // q^2/4 within tolerance of zero but not exactly: treat as triple
            out.roots[0] = newton_polish(c, std::cbrt(-q) - shift);
            out.count = 1;
        } else {
            const double simple = 3.0 * q / p - shift;
            const double dbl = -3.0 * q / (2.0 * p) - shift;
            out.roots[0] = newton_polish(c, std::min(simple, dbl));
            out.roots[1] = newton_polish(c, std::max(simple, dbl));
            out.count = 2;
        }
        return out;
    }

    if (D > 0.0) {
        out.branch = CubicBranch::one_real;
        const double sq = std::sqrt(D);
        // take the larger-magnitude cube-root argument first to avoid
        // cancellation, recover the partner from u*v = -p/3
        const double t = (q > 0.0) ? (-q / 2.0 - sq) : (-q / 2.0 + sq);
        const double u = std::cbrt(t);
        const double y = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
        out.roots[0] = newton_polish(c, y - shift);
        out.count = 1;
        return out;
    }

    out.branch = CubicBranch::three_real;
    const double r = std::sqrt(-p * p * p / 27.0);
    double arg = -q / (2.0 * r);
    arg = std::clamp(arg, -1.0, 1.0);
    const double t = std::acos(arg);
    const double m = 2.0 * std::sqrt(-p / 3.0);
    for (int k = 0; k < 3; ++k) {
        const double y = m * std::cos((t + 2.0 * std::numbers::pi * k) / 3.0);
        out.roots[k] = newton_polish(c, y - shift);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.count = 3;
    return out;
}

} // namespace pam
