// Lower convex envelope of R_{1,d-1} on [1/d, 1]: the tangent-line knee
// solve, a sampled monotone-chain envelope, curvature probes, and the
// per-dimension verification of the piecewise closed form against both.
#pragma once

#include <utility>
#include <vector>

#include "isoeof/rcurve.hpp"

namespace isoeof {

struct TangentKnee {
    double knee_F = 0.0;
    double slope_bits = 0.0;
};

/// R'(F)(1-F) - (log2 d - R(F)): zero exactly where the line through
/// (1, log2 d) is tangent to R. Negative left of the knee, positive right.
double tangency_residual(int d, double F);

/// Solve both tangency conditions by sign-scan plus bisection on
/// [1/d + 1e-6, 1 - 1e-6]. Throws std::domain_error when no sign change
/// exists (globally convex curve, e.g. d = 2); throws std::runtime_error if
/// the residuals at the root exceed tol.
TangentKnee tangent_knee(int d, double tol);

struct ConvexEnvelope {
    int d = 0;
    bool has_knee = false;
    double knee_F = 1.0;      ///< knot where the envelope departs from R; 1.0 when none
    double slope_bits = 0.0;  ///< slope of the terminal hull segment
    std::vector<double> hull_F, hull_R;  ///< lower-hull vertices, F ascending

    /// Piecewise-linear interpolation between hull vertices (F clamped to [1/d, 1]).
    double value(double F) const;
    std::pair<double, double> analytic_interval() const { return {1.0 / d, knee_F}; }
    std::pair<double, double> line_interval() const { return {knee_F, 1.0}; }
};

/// Lower convex hull (monotone chain) of grid_points samples of R_{1,d-1}.
/// The knee is the last hull vertex before F = 1; a terminal segment no wider
/// than a few grid steps means the curve is convex and there is no knee.
ConvexEnvelope numeric_envelope(int d, int grid_points);

/// Central-difference second derivative (R(F-h) - 2R(F) + R(F+h)) / h^2.
double second_derivative_probe(int d, double F, double h);

double conjectured_knee(int d);        ///< 4(d-1)/d^2
double conjectured_slope_bits(int d);  ///< d log2(d-1)/(d-2)

struct ConjectureReport {
    int d = 0;
    double knee_numeric = 0.0;
    double knee_conjectured = 0.0;
    double slope_numeric_bits = 0.0;
    double slope_conjectured_bits = 0.0;
    double max_envelope_deviation_bits = 0.0;
    double tol = 0.0;
    double envelope_tol = 0.0;
    int grid_points = 0;
    bool pass = false;
};

/// Numeric knee/slope vs the conjectured closed forms, plus the piecewise
/// curve vs the sampled envelope. Failures are reported, not thrown.
ConjectureReport verify_conjecture(int d, double tol, int grid_points = 100000,
                                   double envelope_tol = 1e-5);

/// Same check against caller-supplied reference values (negative controls).
ConjectureReport verify_conjecture_against(int d, double knee_ref, double slope_ref, double tol,
                                           int grid_points, double envelope_tol);

}  // namespace isoeof
