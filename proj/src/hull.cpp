#include "isoeof/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isoeof {

namespace {

constexpr double kBracketMargin = 1e-6;  // keep the scan off the endpoints where R' degenerates
constexpr int kScanPoints = 10000;
constexpr double kBisectWidth = 1e-13;

double piecewise_closed_form(int d, double F, double knee, double slope) {
    if (F <= 1.0 / d) return 0.0;
    if (F < knee) return r_value(d, F);
    return slope * (F - 1.0) + std::log2(static_cast<double>(d));
}

}  // namespace

double tangency_residual(int d, double F) {
    return r_derivative(d, F) * (1.0 - F) - (std::log2(static_cast<double>(d)) - r_value(d, F));
}

TangentKnee tangent_knee(int d, double tol) {
    if (d < 3)
        throw std::invalid_argument(
            "tangent_knee: d must be >= 3 (the d = 2 curve is globally convex)");
    if (!(tol > 0.0)) throw std::invalid_argument("tangent_knee: tol must be > 0");

    const double lo = 1.0 / d + kBracketMargin;
    const double hi = 1.0 - kBracketMargin;
    double a = lo, b = 0.0;
    double res_a = tangency_residual(d, a);
    bool bracketed = false;
    for (int i = 1; i < kScanPoints; ++i) {
        const double f = lo + i * (hi - lo) / (kScanPoints - 1);
        const double res = tangency_residual(d, f);
        if (res == 0.0 || (res_a < 0.0) != (res < 0.0)) {
            b = f;
            bracketed = true;
            break;
        }
        a = f;
        res_a = res;
    }
    if (!bracketed)
        throw std::domain_error("tangent_knee: no tangency bracket on (1/d, 1); the curve "
                                "appears globally convex");

    while (b - a > kBisectWidth) {
        const double mid = 0.5 * (a + b);
        const double res = tangency_residual(d, mid);
        if (res == 0.0) {
            a = b = mid;
            break;
        }
        if ((res < 0.0) == (res_a < 0.0)) {
            a = mid;
            res_a = res;
        } else {
            b = mid;
        }
    }

    const double knee = 0.5 * (a + b);
    // The slope condition E_line' = R' holds by construction (slope := R'(knee));
    // the remaining residual is the line-vs-curve mismatch at the knee.
    const double slope = r_derivative(d, knee);
    const double line_residual =
        std::abs(slope * knee + std::log2(static_cast<double>(d)) - slope - r_value(d, knee));
    if (line_residual > tol)
        throw std::runtime_error("tangent_knee: tangency residual " +
                                 std::to_string(line_residual) + " exceeds tol");
    return TangentKnee{knee, slope};
}

double ConvexEnvelope::value(double F) const {
    const double lo = 1.0 / d;
    F = std::clamp(F, lo, 1.0);
    const auto it = std::upper_bound(hull_F.begin(), hull_F.end(), F);
    if (it == hull_F.begin()) return hull_R.front();
    if (it == hull_F.end()) return hull_R.back();
    const std::size_t j = static_cast<std::size_t>(it - hull_F.begin());
    const double x0 = hull_F[j - 1], x1 = hull_F[j];
    const double y0 = hull_R[j - 1], y1 = hull_R[j];
    const double w = (F - x0) / (x1 - x0);
    return y0 + w * (y1 - y0);
}

ConvexEnvelope numeric_envelope(int d, int grid_points) {
    if (d < 2) throw std::invalid_argument("numeric_envelope: d must be >= 2");
    if (grid_points < 100)
        throw std::invalid_argument("numeric_envelope: grid_points must be >= 100");

    const std::vector<double> r = r_values_on_grid(d, grid_points);

    // Monotone-chain lower hull; pop while the middle point is not strictly
    // below the chord (cross <= 0).
    std::vector<int> hull;
    hull.reserve(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        const double fi = grid_point(d, grid_points, i);
        const double ri = r[static_cast<std::size_t>(i)];
        while (hull.size() >= 2) {
            const int i0 = hull[hull.size() - 2], i1 = hull[hull.size() - 1];
            const double f0 = grid_point(d, grid_points, i0);
            const double f1 = grid_point(d, grid_points, i1);
            const double r0 = r[static_cast<std::size_t>(i0)];
            const double r1 = r[static_cast<std::size_t>(i1)];
            const double cross = (f1 - f0) * (ri - r0) - (r1 - r0) * (fi - f0);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }

    ConvexEnvelope env;
    env.d = d;
    env.hull_F.reserve(hull.size());
    env.hull_R.reserve(hull.size());
    for (int idx : hull) {
        env.hull_F.push_back(grid_point(d, grid_points, idx));
        env.hull_R.push_back(r[static_cast<std::size_t>(idx)]);
    }

    const std::size_t nv = env.hull_F.size();
    const double step = (1.0 - 1.0 / d) / (grid_points - 1);
    const double terminal = env.hull_F[nv - 1] - env.hull_F[nv - 2];
    env.has_knee = terminal > 2.5 * step;
    env.knee_F = env.has_knee ? env.hull_F[nv - 2] : 1.0;
    env.slope_bits = (env.hull_R[nv - 1] - env.hull_R[nv - 2]) / terminal;
    return env;
}

double second_derivative_probe(int d, double F, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("second_derivative_probe: h must be > 0");
    if (!(F - h > 1.0 / d && F + h < 1.0))
        throw std::domain_error("second_derivative_probe: stencil [F-h, F+h] leaves (1/d, 1)");
    return (r_value(d, F - h) - 2.0 * r_value(d, F) + r_value(d, F + h)) / (h * h);
}

double conjectured_knee(int d) {
    if (d < 3) throw std::invalid_argument("conjectured_knee: d must be >= 3");
    return 4.0 * (d - 1) / (static_cast<double>(d) * d);
}

double conjectured_slope_bits(int d) {
    if (d < 3) throw std::invalid_argument("conjectured_slope_bits: d must be >= 3");
    return d * std::log2(static_cast<double>(d - 1)) / (d - 2);
}

ConjectureReport verify_conjecture_against(int d, double knee_ref, double slope_ref, double tol,
                                           int grid_points, double envelope_tol) {
    if (d < 3) throw std::invalid_argument("verify_conjecture: d must be >= 3");
    if (!(tol > 0.0) || !(envelope_tol > 0.0))
        throw std::invalid_argument("verify_conjecture: tolerances must be > 0");

    ConjectureReport report;
    report.d = d;
    report.knee_conjectured = knee_ref;
    report.slope_conjectured_bits = slope_ref;
    report.tol = tol;
    report.envelope_tol = envelope_tol;
    report.grid_points = grid_points;

    bool knee_ok = false;
    try {
        const TangentKnee tk = tangent_knee(d, std::max(tol, 1e-10));
        report.knee_numeric = tk.knee_F;
        report.slope_numeric_bits = tk.slope_bits;
        knee_ok = std::abs(tk.knee_F - knee_ref) < tol && std::abs(tk.slope_bits - slope_ref) < tol;
    } catch (const std::exception&) {
        report.knee_numeric = std::nan("");
        report.slope_numeric_bits = std::nan("");
    }

    const ConvexEnvelope env = numeric_envelope(d, grid_points);
    double max_dev = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double f = grid_point(d, grid_points, i);
        const double dev = std::abs(piecewise_closed_form(d, f, knee_ref, slope_ref) - env.value(f));
        max_dev = std::max(max_dev, dev);
    }
    report.max_envelope_deviation_bits = max_dev;
    report.pass = knee_ok && max_dev < envelope_tol;
    return report;
}

ConjectureReport verify_conjecture(int d, double tol, int grid_points, double envelope_tol) {
    return verify_conjecture_against(d, conjectured_knee(d), conjectured_slope_bits(d), tol,
                                     grid_points, envelope_tol);
}

}  // namespace isoeof
