#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "isoeof/hull.hpp"

using namespace isoeof;

namespace {

int residual_sign_changes(int d, int points) {
    const double lo = 1.0 / d + 1e-6, hi = 1.0 - 1e-6;
    int changes = 0;
    double prev = tangency_residual(d, lo);
    for (int i = 1; i < points; ++i) {
        const double f = lo + i * (hi - lo) / (points - 1);
        const double res = tangency_residual(d, f);
        if ((prev < 0.0) != (res < 0.0)) ++changes;
        prev = res;
    }
    return changes;
}

}  // namespace

TEST_CASE("tangency residual changes sign across the knee (d = 3)") {
    CHECK(tangency_residual(3, 0.5) < 0.0);
    CHECK(tangency_residual(3, 0.999) > 0.0);
}

TEST_CASE("tangent knee reproduces the closed-form knots") {
    const TangentKnee k3 = tangent_knee(3, 1e-8);
    CHECK(std::abs(k3.knee_F - 8.0 / 9) < 1e-9);
    CHECK(std::abs(k3.slope_bits - 3.0) < 1e-9);

    const TangentKnee k4 = tangent_knee(4, 1e-8);
    CHECK(std::abs(k4.knee_F - 0.75) < 1e-9);
    CHECK(std::abs(k4.slope_bits - 2.0 * std::log2(3.0)) < 1e-9);

    const TangentKnee k5 = tangent_knee(5, 1e-8);
    CHECK(std::abs(k5.knee_F - 0.64) < 1e-9);
    CHECK(std::abs(k5.slope_bits - 10.0 / 3) < 1e-9);
}

TEST_CASE("tangency conditions hold at the solved knee") {
    for (int d : {3, 4, 6}) {
        const TangentKnee k = tangent_knee(d, 1e-8);
        const double line = k.slope_bits * k.knee_F + std::log2(double(d)) - k.slope_bits;
        CHECK(std::abs(line - r_value(d, k.knee_F)) < 1e-10);
        CHECK(std::abs(r_derivative(d, k.knee_F) - k.slope_bits) < 1e-12);
    }
}

TEST_CASE("tangency root is unique on the scan grid for d = 3..8") {
    for (int d = 3; d <= 8; ++d) CHECK(residual_sign_changes(d, 10000) == 1);
}

TEST_CASE("tangent knee rejects d = 2 and bad tolerances") {
    CHECK_THROWS_AS(tangent_knee(2, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(tangent_knee(3, -1.0), std::invalid_argument);
}

TEST_CASE("numeric envelope: knee location, endpoints, dominance, convexity") {
    const int grid = 10000;
    const ConvexEnvelope env = numeric_envelope(3, grid);
    const double step = (1.0 - 1.0 / 3) / (grid - 1);

    CHECK(env.has_knee);
    CHECK(std::abs(env.knee_F - 8.0 / 9) <= 2.0 * step);
    CHECK(env.value(1.0) == doctest::Approx(std::log2(3.0)).epsilon(1e-10));
    CHECK(std::abs(env.value(1.0 / 3)) < 1e-12);
    CHECK(env.analytic_interval().first == doctest::Approx(1.0 / 3));
    CHECK(env.line_interval().second == 1.0);

    // envelope never exceeds the curve on its own grid
    for (int i = 0; i < grid; i += 7) {
        const double f = grid_point(3, grid, i);
        CHECK(env.value(f) <= r_value(3, f) + 1e-10);
    }

    // discrete convexity on a uniform evaluation grid
    const int m = 2000;
    double prev = env.value(1.0 / 3), cur = env.value(1.0 / 3 + (1.0 - 1.0 / 3) / m);
    for (int i = 2; i <= m; ++i) {
        const double next = env.value(1.0 / 3 + i * (1.0 - 1.0 / 3) / m);
        CHECK(prev - 2.0 * cur + next >= -1e-8);
        prev = cur;
        cur = next;
    }
}

TEST_CASE("numeric envelope agrees with the tangent construction") {
    for (int d : {3, 4, 6}) {
        const int grid = 20000;
        const ConvexEnvelope env = numeric_envelope(d, grid);
        const TangentKnee tk = tangent_knee(d, 1e-8);
        const double step = (1.0 - 1.0 / d) / (grid - 1);
        CHECK(std::abs(env.knee_F - tk.knee_F) <= 2.0 * step);
        CHECK(std::abs(env.slope_bits - tk.slope_bits) < 1e-3);

        // linear above the knee, equal to R below it
        const double mid_line = 0.5 * (env.knee_F + 1.0);
        const double line_val = tk.slope_bits * (mid_line - 1.0) + std::log2(double(d));
        CHECK(std::abs(env.value(mid_line) - line_val) < 1e-6);
        const double mid_curve = 0.5 * (1.0 / d + env.knee_F);
        CHECK(std::abs(env.value(mid_curve) - r_value(d, mid_curve)) < 1e-8);
    }
}

TEST_CASE("d = 2 envelope certifies global convexity (no knee)") {
    const ConvexEnvelope env = numeric_envelope(2, 10000);
    CHECK_FALSE(env.has_knee);
    CHECK(env.knee_F == 1.0);
    for (int i = 0; i < 10000; i += 11) {
        const double f = grid_point(2, 10000, i);
        CHECK(std::abs(env.value(f) - r_value(2, f)) < 1e-8);
    }
}

TEST_CASE("second derivative probe: convex middle, concave near F = 1") {
    CHECK(second_derivative_probe(3, 0.5, 1e-4) > 0.0);
    CHECK(second_derivative_probe(3, 0.99, 1e-4) < 0.0);

    double prev = second_derivative_probe(3, 1.0 - std::pow(2.0, -4), 1e-4);
    for (int k = 5; k <= 10; ++k) {
        const double cur = second_derivative_probe(3, 1.0 - std::pow(2.0, -k), 1e-4);
        CHECK(cur < prev);  // heading to -infinity at F = 1
        prev = cur;
    }

    CHECK_THROWS_AS(second_derivative_probe(3, 1.0 / 3, 1e-4), std::domain_error);
    CHECK_THROWS_AS(second_derivative_probe(3, 0.9999999, 1e-4), std::domain_error);
    CHECK_THROWS_AS(second_derivative_probe(3, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("conjectured closed forms at small d") {
    CHECK(conjectured_knee(3) == doctest::Approx(8.0 / 9).epsilon(1e-15));
    CHECK(conjectured_knee(4) == 0.75);
    CHECK(conjectured_slope_bits(3) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(conjectured_slope_bits(5) == doctest::Approx(10.0 / 3).epsilon(1e-15));
    CHECK_THROWS_AS(conjectured_knee(2), std::invalid_argument);
}

TEST_CASE("verify_conjecture passes for d = 3 and 4") {
    const ConjectureReport r3 = verify_conjecture(3, 1e-8, 20000, 1e-5);
    CHECK(r3.pass);
    CHECK(std::abs(r3.knee_numeric - r3.knee_conjectured) < 1e-8);
    CHECK(std::abs(r3.slope_numeric_bits - r3.slope_conjectured_bits) < 1e-8);
    CHECK(r3.max_envelope_deviation_bits < 1e-5);

    CHECK(verify_conjecture(4, 1e-7, 20000, 1e-5).pass);
}

TEST_CASE("verify_conjecture fails on perturbed reference constants") {
    const ConjectureReport bad_knee =
        verify_conjecture_against(3, 8.0 / 9 + 1e-3, 3.0, 1e-8, 5000, 1e-5);
    CHECK_FALSE(bad_knee.pass);

    const ConjectureReport bad_slope =
        verify_conjecture_against(3, 8.0 / 9, 3.0 + 1e-3, 1e-8, 5000, 1e-5);
    CHECK_FALSE(bad_slope.pass);
}
