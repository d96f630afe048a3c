#include "isoeof/eof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isoeof {

namespace {

void check_eof_args(int d, double F) {
    if (d < 2) throw std::invalid_argument("eof_isotropic: d must be >= 2");
    if (F < -kInvariantSlack || F > 1.0 + kInvariantSlack)
        throw std::domain_error("eof_isotropic: F = " + std::to_string(F) + " outside [0, 1]");
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::separable: return "separable";
        case Regime::analytic: return "analytic";
        case Regime::linear: return "linear";
    }
    return "unknown";
}

std::string to_string(Source s) {
    return s == Source::closed_form ? "closed_form" : "numeric_envelope";
}

EofResult eof_isotropic(int d, double F) {
    check_eof_args(d, F);
    F = std::clamp(F, 0.0, 1.0);
    if (F <= 1.0 / d) return {d, F, {0.0}, Regime::separable, Source::closed_form};
    if (d == 2) return {d, F, {r_value(2, F)}, Regime::analytic, Source::closed_form};

    // The linear branch owns the knee itself; values agree there by continuity.
    const double knee = conjectured_knee(d);
    if (F < knee) return {d, F, {r_value(d, F)}, Regime::analytic, Source::closed_form};
    const double slope = conjectured_slope_bits(d);
    const double bits = slope * (F - 1.0) + std::log2(static_cast<double>(d));
    return {d, F, {bits}, Regime::linear, Source::closed_form};
}

EofResult eof_isotropic_numeric(int d, double F, int grid_points) {
    check_eof_args(d, F);
    F = std::clamp(F, 0.0, 1.0);
    if (F <= 1.0 / d) return {d, F, {0.0}, Regime::separable, Source::numeric_envelope};

    const ConvexEnvelope env = numeric_envelope(d, grid_points);
    const Regime regime =
        env.has_knee && F >= env.knee_F ? Regime::linear : Regime::analytic;
    return {d, F, {env.value(F)}, regime, Source::numeric_envelope};
}

std::vector<EofCurveRow> eof_curve(int d, int points, int envelope_grid) {
    if (d < 2) throw std::invalid_argument("eof_curve: d must be >= 2");
    if (points < 2) throw std::invalid_argument("eof_curve: points must be >= 2");

    const ConvexEnvelope env = numeric_envelope(d, envelope_grid);
    const double lo = 1.0 / d;

    std::vector<EofCurveRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double F = i + 1 == points ? 1.0 : static_cast<double>(i) / (points - 1);
        EofCurveRow row;
        row.F = F;
        if (F >= lo - kInvariantSlack) row.r_bits = r_value(d, F);
        row.e_analytic_bits = eof_isotropic(d, F).value.bits;
        row.e_numeric_bits = F <= lo ? 0.0 : env.value(F);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace isoeof
