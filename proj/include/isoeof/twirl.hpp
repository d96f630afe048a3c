// U (x) U* twirling: Haar-random unitaries, single-shot conjugation, the
// closed-form image of a pure state, and a Monte Carlo estimate of the
// twirling superoperator.
//
// Monte Carlo accumulation is chunked in a fixed order, so a fixed seed
// yields a bit-identical report for any thread count. The _serial variants
// are straightforward reference loops kept for testing and benchmarking.
#pragma once

#include <cstdint>

#include "isoeof/states.hpp"

namespace isoeof {

inline constexpr double kUnitaryTol = 1e-10;

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(Matrix u);
    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase correction (plain QR alone is not Haar).
/// Deterministic per (d, seed).
UnitaryMatrix haar_random_unitary(int d, std::uint64_t seed);

/// (U x U*) rho (U x U*)^dagger. Trace and spectrum preserved.
DensityMatrix twirl_once(const DensityMatrix& rho, const UnitaryMatrix& u);

/// Exact image of |psi(mu)> under twirling when the two Schmidt bases differ
/// by V: isotropic with F = |sum_i sqrt(mu_i) V_ii|^2 / d.
IsotropicState twirl_closed_form(const SchmidtVector& mu, const UnitaryMatrix& v);

struct TwirlReport {
    int samples = 0;
    DensityMatrix mc_average;
    DensityMatrix closed_form;  ///< isotropic_density(d, fidelity(input)), the exact image
    double frobenius_distance = 0.0;  ///< ||mc_average - closed_form||_F
    double estimated_F = 0.0;         ///< fidelity of the MC average
    double exact_F = 0.0;             ///< fidelity of the input
    double std_error = 0.0;  ///< sqrt(sum_ij Var(entry_ij)/samples); 0 when samples < 2
};

TwirlReport twirl_monte_carlo(const DensityMatrix& rho, int d, int samples, std::uint64_t seed);
TwirlReport twirl_monte_carlo_serial(const DensityMatrix& rho, int d, int samples,
                                     std::uint64_t seed);

/// Same estimate with every sampled unitary left-multiplied by the fixed
/// unitary w. By Haar invariance the average has the same distribution;
/// used by the symmetry checks.
TwirlReport twirl_monte_carlo_premultiplied(const DensityMatrix& rho, int d, int samples,
                                            std::uint64_t seed, const UnitaryMatrix& w);

}  // namespace isoeof
