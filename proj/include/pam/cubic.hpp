#pragma once

#include <array>

namespace pam {

// Monic cubic x^3 + a2*x^2 + a1*x + a0 = 0.
struct CubicCoefficients {
    double a2;
    double a1;
    double a0;
};

enum class CubicBranch {
    one_real,   // D > 0
    three_real, // D < 0
    multiple,   // |D| within tolerance of zero: double or triple root
};

struct CubicRoots {
    std::array<double, 3> roots{}; // ascending; only the first `count` valid
    int count = 0;
    double discriminant = 0.0; // D = q^2/4 + p^3/27 of the depressed cubic
    CubicBranch branch = CubicBranch::one_real;
};

// Closed-form real roots via the depressed-cubic substitution
// y = x + a2/3, p = a1 - a2^2/3, q = a0 - a1*a2/3 + 2*a2^3/27:
//   D > 0: single real root from the cube-root formula,
//   D < 0: three roots from the trigonometric form,
//   |D| <= 1e-12*max(1, q^2, |p|^3): multiple-root formulas
//          {3q/p, -3q/(2p)} or the triple root -a2/3 when p = q = 0.
// Every root is polished by one Newton step; residuals satisfy
// |cubic(x)| <= 1e-9 * max(1, |a0|, |a1|, |a2|).
// Throws DomainError on non-finite coefficients.
CubicRoots solve_cubic(const CubicCoefficients& c);

double evaluate_cubic(const CubicCoefficients& c, double x);

} // namespace pam
