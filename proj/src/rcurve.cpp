#include "isoeof/rcurve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isoeof {

namespace {

void check_branch_labels(int n, int m, int d) {
    if (d < 2) throw std::invalid_argument("branch: d must be >= 2");
    if (n < 1 || m < 1 || n + m > d)
        throw std::invalid_argument("branch: need n >= 1, m >= 1, n + m <= d (got n=" +
                                    std::to_string(n) + ", m=" + std::to_string(m) +
                                    ", d=" + std::to_string(d) + ")");
}

double clamp_into_domain(int n, int m, int d, double F) {
    const double lo = static_cast<double>(n) / d;
    const double hi = static_cast<double>(n + m) / d;
    if (F < lo - kInvariantSlack || F > hi + kInvariantSlack)
        throw std::domain_error("branch (" + std::to_string(n) + "," + std::to_string(m) +
                                "): F = " + std::to_string(F) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return std::clamp(F, lo, hi);
}

double gamma_root(int n, int m, int d, double F, int sign) {
    check_branch_labels(n, m, d);
    F = clamp_into_domain(n, m, d, F);
    const double df = d * F;
    double radicand = static_cast<double>(m) * n * (m + n - df);
    if (radicand < 0.0) {
        if (radicand < -kRadicandClamp)
            throw std::domain_error("branch gamma: negative radicand " +
                                    std::to_string(radicand));
        radicand = 0.0;
    }
    const double root = (std::sqrt(df) * n + sign * std::sqrt(radicand)) /
                        (static_cast<double>(n) * (n + m));
    return root * root;
}

double delta_of_gamma(int n, int m, double g) {
    double t = (1.0 - n * g) / m;
    if (t < 0.0 && t > -kRadicandClamp) t = 0.0;
    return t;
}

}  // namespace

std::vector<Branch> branches_for(int d) {
    if (d < 2) throw std::invalid_argument("branches_for: d must be >= 2");
    std::vector<Branch> out;
    for (int n = 1; n < d; ++n)
        for (int m = 1; n + m <= d; ++m) out.push_back(Branch{n, m, d});
    return out;
}

double gamma_plus(int n, int m, int d, double F) { return gamma_root(n, m, d, F, +1); }
double gamma_minus(int n, int m, int d, double F) { return gamma_root(n, m, d, F, -1); }

BranchEval branch_value(int n, int m, int d, double F) {
    const double g = gamma_plus(n, m, d, F);
    const double t = delta_of_gamma(n, m, g);
    if (t < 0.0)
        throw std::domain_error("branch_value: delta = " + std::to_string(t) + " negative");
    if (g < t - kRadicandClamp)
        throw std::logic_error("branch_value: gamma < delta, outside the expected regime");

    const double ng = std::min(1.0, n * g);
    const double h2_form = binary_entropy(ng).bits +
                           ng * std::log2(static_cast<double>(n) / m) +
                           std::log2(static_cast<double>(m));
    const double direct_form = n * entropy_term(g) + m * entropy_term(t);
    if (std::abs(h2_form - direct_form) > kConstraintTol)
        throw std::logic_error("branch_value: H2 form and n h(g) + m h(t) disagree by " +
                               std::to_string(h2_form - direct_form));
    return BranchEval{F, g, t, {h2_form}};
}

double branch_value_minus_bits(int n, int m, int d, double F) {
    const double g = gamma_minus(n, m, d, F);
    const double t = delta_of_gamma(n, m, g);
    return n * entropy_term(g) + m * entropy_term(t);
}

RPoint r_pointwise_min(int d, double F) {
    if (d < 2) throw std::invalid_argument("r_pointwise_min: d must be >= 2");
    const double lo = 1.0 / d;
    if (F < lo - kInvariantSlack || F > 1.0 + kInvariantSlack)
        throw std::domain_error("r_pointwise_min: F = " + std::to_string(F) +
                                " outside [1/d, 1]");
    F = std::clamp(F, lo, 1.0);

    bool found = false;
    RPoint best{};
    for (const Branch& b : branches_for(d)) {
        if (!b.contains(F)) continue;
        BranchEval eval = branch_value(b.n, b.m, d, F);
        if (!found || eval.value.bits < best.eval.value.bits - kBranchTie) {
            best = RPoint{b, eval};
            found = true;
        }
    }
    if (!found) throw std::logic_error("r_pointwise_min: no branch covers F");  // unreachable
    return best;
}

double r_gamma(int d, double F) {
    if (d < 2) throw std::invalid_argument("r_gamma: d must be >= 2");
    const double lo = 1.0 / d;
    if (F < lo - kInvariantSlack || F > 1.0 + kInvariantSlack)
        throw std::domain_error("r_gamma: F = " + std::to_string(F) + " outside [1/d, 1]");
    F = std::clamp(F, lo, 1.0);
    const double u = std::sqrt(F);
    const double v = std::sqrt(std::max(0.0, (d - 1) * (1.0 - F)));
    const double s = u + v;
    return std::min(1.0, s * s / d);
}

double r_value(int d, double F) {
    const double g = r_gamma(d, F);
    return binary_entropy(g).bits + (1.0 - g) * std::log2(static_cast<double>(d - 1));
}

double r_derivative(int d, double F) {
    if (d < 2) throw std::invalid_argument("r_derivative: d must be >= 2");
    if (!(F > 1.0 / d && F < 1.0))
        throw std::domain_error("r_derivative: F = " + std::to_string(F) +
                                " outside the open interval (1/d, 1)");
    const double u = std::sqrt(F);
    const double v = std::sqrt((d - 1) * (1.0 - F));
    const double g = std::min(1.0, (u + v) * (u + v) / d);
    const double dg_dF = (u + v) / d * (1.0 / u - (d - 1) / v);
    const double dR_dg =
        std::log2((1.0 - g) / g) - std::log2(static_cast<double>(d - 1));
    return dR_dg * dg_dF;
}

double grid_point(int d, int points, int index) {
    const double lo = 1.0 / d;
    if (index <= 0) return lo;
    if (index >= points - 1) return 1.0;
    return lo + index * (1.0 - lo) / (points - 1);
}

std::vector<double> r_values_on_grid(int d, int points) {
    if (points < 2) throw std::invalid_argument("r_values_on_grid: points must be >= 2");
    std::vector<double> out(static_cast<std::size_t>(points));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = r_value(d, grid_point(d, points, i));
    return out;
}

std::vector<double> r_values_on_grid_serial(int d, int points) {
    if (points < 2) throw std::invalid_argument("r_values_on_grid_serial: points must be >= 2");
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = r_value(d, grid_point(d, points, i));
    return out;
}

std::vector<RnmRow> r_curve_rows(int d, int points) {
    if (points < 2) throw std::invalid_argument("r_curve_rows: points must be >= 2");
    std::vector<RnmRow> rows;
    for (const Branch& b : branches_for(d)) {
        const double lo = b.domain_lo(), hi = b.domain_hi();
        for (int i = 0; i < points; ++i) {
            const double F = i + 1 == points ? hi : lo + i * (hi - lo) / (points - 1);
            rows.push_back(RnmRow{F, b.n, b.m, branch_value(b.n, b.m, d, F).value.bits});
        }
    }
    return rows;
}

}  // namespace isoeof
