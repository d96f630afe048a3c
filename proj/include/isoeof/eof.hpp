// Entanglement of formation for isotropic states. Two routes: the piecewise
// closed form (analytic branch below the knee at 4(d-1)/d^2, tangent line
// above; plain binary-entropy form for d = 2), and a numeric-envelope route
// that trusts nothing but the sampled convex hull. verify_conjecture in the
// hull module gates the closed form per dimension.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoeof/hull.hpp"

namespace isoeof {

enum class Regime { separable, analytic, linear };
enum class Source { closed_form, numeric_envelope };

std::string to_string(Regime r);
std::string to_string(Source s);

struct EofResult {
    int d = 0;
    double F = 0.0;
    EntropyValue value;
    Regime regime = Regime::separable;
    Source source = Source::closed_form;
};

/// Piecewise closed form. Throws std::domain_error for F outside [0,1] and
/// std::invalid_argument for d < 2.
EofResult eof_isotropic(int d, double F);

/// Value interpolated from the sampled convex envelope; does not rely on the
/// conjectured knee location.
EofResult eof_isotropic_numeric(int d, double F, int grid_points = 10000);

struct EofCurveRow {
    double F = 0.0;
    std::optional<double> r_bits;  ///< empty where R is undefined (F < 1/d)
    double e_analytic_bits = 0.0;
    double e_numeric_bits = 0.0;
};

/// Uniform F grid on [0, 1]; the data product behind the curve plots.
std::vector<EofCurveRow> eof_curve(int d, int points, int envelope_grid = 10000);

}  // namespace isoeof
