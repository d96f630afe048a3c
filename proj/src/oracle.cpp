// Brute-force minimizer for the constrained entropy problem, used as an
// independent check on the branch closed forms. Works in x_i = sqrt(mu_i):
// minimize -sum x^2 log2 x^2 over the slice {x >= 0, sum x = sqrt(dF),
// ||x|| = 1}, which is a (d-2)-sphere cut by the positive orthant.
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoeof/rcurve.hpp"
#include "isoeof/rng.hpp"

namespace isoeof {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kObjectiveGate = 1e-12;  // stop when the objective delta drops below this

double objective_bits(const std::vector<double>& x) {
    double h = 0.0;
    for (double xi : x) h += entropy_term(xi * xi);
    return h;
}

void gradient_bits(const std::vector<double>& x, std::vector<double>& g) {
    // d/dx [-x^2 log2 x^2] = -(2x/ln2)(2 ln x + 1); limit 0 at x = 0.
    constexpr double inv_ln2 = 1.0 / std::numbers::ln2;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        g[i] = xi > 1e-300 ? -(2.0 * xi * inv_ln2) * (2.0 * std::log(xi) + 1.0) : 0.0;
    }
}

// Map y onto {x >= 0, sum x = s, ||x|| = 1}, best effort: exact projection
// onto the sphere-plane slice over the active support, then deactivate the
// most negative coordinate and repeat. When the support cannot shrink any
// further (s > sqrt(k-1)) remaining negatives are clamped.
void project_feasible(std::vector<double>& x, double s) {
    const std::size_t d = x.size();
    std::vector<char> active(d, 1);
    std::vector<double> dir(d, 0.0);
    int k = static_cast<int>(d);

    for (std::size_t pass = 0; pass <= d; ++pass) {
        if (k == 1) {
            // Single coordinate: feasible only when s = 1 (the F = 1/d corner).
            for (std::size_t i = 0; i < d; ++i) x[i] = active[i] ? 1.0 : 0.0;
            return;
        }
        double mean = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            if (active[i]) mean += x[i];
        mean /= k;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            dir[i] = active[i] ? x[i] - mean : 0.0;
            norm2 += dir[i] * dir[i];
        }
        double nz = std::sqrt(norm2);
        if (nz < 1e-14) {
            // Degenerate direction (x uniform over the support): fall back to
            // a fixed alternating vector, re-centered over the support.
            int idx = 0;
            double fix = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                dir[i] = active[i] ? (idx++ % 2 == 0 ? 1.0 : -1.0) : 0.0;
                fix += dir[i];
            }
            fix /= k;
            norm2 = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                if (active[i]) dir[i] -= fix;
                norm2 += dir[i] * dir[i];
            }
            nz = std::sqrt(std::max(norm2, 1e-30));
        }

        const double radius = std::sqrt(std::max(0.0, 1.0 - s * s / k));
        const double target_mean = s / k;
        int worst = -1;
        double worst_val = -kRadicandClamp;
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = active[i] ? target_mean + radius * dir[i] / nz : 0.0;
            if (x[i] < worst_val) {
                worst_val = x[i];
                worst = static_cast<int>(i);
            }
        }
        if (worst < 0) return;  // feasible
        if (s * s > k - 1) {
            // Support cannot shrink: sum x over k-1 positive coords caps at sqrt(k-1).
            for (std::size_t i = 0; i < d; ++i) x[i] = std::max(x[i], 0.0);
            return;
        }
        active[worst] = 0;
        x[worst] = 0.0;
        --k;
    }
}

double run_restart(int d, double s, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> x(d);
    for (double& xi : x) xi = std::abs(gauss(engine));
    project_feasible(x, s);

    std::vector<double> grad(x.size()), trial(x.size());
    std::vector<double> x_prev, grad_prev;
    double f = objective_bits(x);
    double step = 0.25;

    for (int it = 0; it < kMaxIterations; ++it) {
        gradient_bits(x, grad);
        if (!x_prev.empty()) {
            // Barzilai-Borwein step guess, clamped; backtracking guards it.
            double sy = 0.0, ss = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double dx = x[i] - x_prev[i];
                const double dg = grad[i] - grad_prev[i];
                sy += dx * dg;
                ss += dx * dx;
            }
            if (sy > 1e-18) step = std::clamp(ss / sy, 1e-8, 1e3);
        }

        double f_new = f;
        bool descended = false;
        double local_step = step;
        for (int bt = 0; bt < 40; ++bt) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - local_step * grad[i];
            project_feasible(trial, s);
            f_new = objective_bits(trial);
            if (f_new < f) {
                descended = true;
                break;
            }
            local_step *= 0.5;
        }
        if (!descended) break;

        x_prev = x;
        grad_prev = grad;
        x.swap(trial);
        const double delta = f - f_new;
        f = f_new;
        if (delta < kObjectiveGate) break;
    }
    return f;
}

void check_oracle_args(int d, double F, int restarts) {
    if (d < 2) throw std::invalid_argument("oracle_min_entropy: d must be >= 2");
    if (restarts < 1) throw std::invalid_argument("oracle_min_entropy: restarts must be >= 1");
    if (F < 1.0 / d - kInvariantSlack || F > 1.0 + kInvariantSlack)
        throw std::domain_error("oracle_min_entropy: F = " + std::to_string(F) +
                                " outside [1/d, 1]");
}

}  // namespace

EntropyValue oracle_min_entropy(int d, double F, int restarts, std::uint64_t seed) {
    check_oracle_args(d, F, restarts);
    const double s = std::sqrt(d * std::clamp(F, 1.0 / d, 1.0));

    double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int r = 0; r < restarts; ++r)
        best = std::min(best, run_restart(d, s, child_seed(seed, static_cast<std::uint64_t>(r))));
    return {std::max(0.0, best)};
}

EntropyValue oracle_min_entropy_serial(int d, double F, int restarts, std::uint64_t seed) {
    check_oracle_args(d, F, restarts);
    const double s = std::sqrt(d * std::clamp(F, 1.0 / d, 1.0));

    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r)
        best = std::min(best, run_restart(d, s, child_seed(seed, static_cast<std::uint64_t>(r))));
    return {std::max(0.0, best)};
}

}  // namespace isoeof
