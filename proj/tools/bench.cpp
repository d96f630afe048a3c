// Serial vs OpenMP timings for the three data-parallel kernels: Monte Carlo
// twirl averaging, oracle restarts, and R-grid evaluation. The parallel
// versions must reproduce the serial results (bitwise for the oracle and the
// grid, to rounding for the chunked twirl reduction); this binary prints both
// the timings and the observed deviations.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <omp.h>

#include <CLI11.hpp>

#include "isoeof/hull.hpp"
#include "isoeof/twirl.hpp"

namespace {

template <typename Fn>
double best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void print_row(const char* name, double serial_s, double parallel_s, double deviation) {
    std::printf("%-12s %10.4fs %10.4fs %7.2fx   max|diff| = %.3g\n", name, serial_s, parallel_s,
                serial_s / parallel_s, deviation);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    int d = 3;
    int samples = 4000;
    int restarts = 400;
    int grid = 2000000;
    int repeats = 3;
    std::uint64_t seed = 0;
    app.add_option("--d", d, "local dimension");
    app.add_option("--samples", samples, "twirl Monte Carlo samples");
    app.add_option("--restarts", restarts, "oracle restarts");
    app.add_option("--grid", grid, "R-grid points");
    app.add_option("--repeats", repeats, "timing repeats (best taken)");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d (d = %d)\n", omp_get_max_threads(), d);
    std::printf("%-12s %11s %11s %8s\n", "kernel", "serial", "openmp", "speedup");

    using namespace isoeof;

    {
        const DensityMatrix rho = pure_state_from_schmidt(SchmidtVector::uniform(d));
        TwirlReport serial = twirl_monte_carlo_serial(rho, d, samples, seed);
        TwirlReport parallel = twirl_monte_carlo(rho, d, samples, seed);
        const double dev =
            (serial.mc_average.mat() - parallel.mc_average.mat()).cwiseAbs().maxCoeff();
        const double ts =
            best_of(repeats, [&] { (void)twirl_monte_carlo_serial(rho, d, samples, seed); });
        const double tp = best_of(repeats, [&] { (void)twirl_monte_carlo(rho, d, samples, seed); });
        print_row("twirl-mc", ts, tp, dev);
    }

    {
        const double F = 0.75;
        const double vs = oracle_min_entropy_serial(d, F, restarts, seed).bits;
        const double vp = oracle_min_entropy(d, F, restarts, seed).bits;
        const double ts =
            best_of(repeats, [&] { (void)oracle_min_entropy_serial(d, F, restarts, seed); });
        const double tp = best_of(repeats, [&] { (void)oracle_min_entropy(d, F, restarts, seed); });
        print_row("oracle", ts, tp, std::abs(vs - vp));
    }

    {
        const std::vector<double> vs = r_values_on_grid_serial(d, grid);
        const std::vector<double> vp = r_values_on_grid(d, grid);
        double dev = 0.0;
        for (std::size_t i = 0; i < vs.size(); ++i) dev = std::max(dev, std::abs(vs[i] - vp[i]));
        const double ts = best_of(repeats, [&] { (void)r_values_on_grid_serial(d, grid); });
        const double tp = best_of(repeats, [&] { (void)r_values_on_grid(d, grid); });
        print_row("r-grid", ts, tp, dev);
    }

    return 0;
}
