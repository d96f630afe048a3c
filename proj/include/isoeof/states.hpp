// Dense complex matrices for the isotropic family: the maximally entangled
// projector, the isotropic mixture (1-F)/(d^2-1) (1 - P+) + F P+, fidelity
// extraction, and pure states with a prescribed Schmidt vector.
//
// Tensor index convention is row-major: |i>|j> lives at index i*d + j.
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isoeof/entropy.hpp"

namespace isoeof {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalue floor for the PSD check; relaxed to absorb Monte Carlo
/// averaging error downstream.
inline constexpr double kPsdFloor = -1e-9;

/// Hermitian, trace-one, positive semidefinite matrix. All three invariants
/// are checked on construction.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m);
    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

/// (d, F) parametrization of the isotropic family; separable iff F <= 1/d.
struct IsotropicState {
    int d;
    double F;
    IsotropicState(int d_, double F_);
    bool separable() const { return F <= 1.0 / d; }
};

/// P+ = |Psi+><Psi+| with |Psi+> = (1/sqrt d) sum_i |ii>, on a d^2 space.
DensityMatrix max_entangled_projector(int d);

/// ((1-F)/(d^2-1)) (1 - P+) + F P+. Eigenvalues are F (multiplicity 1) and
/// (1-F)/(d^2-1) (multiplicity d^2-1).
DensityMatrix isotropic_density(const IsotropicState& state);

/// Re <Psi+| rho |Psi+>; recovers F for isotropic inputs.
double fidelity(const DensityMatrix& rho, int d);

/// Rank-1 density matrix of |psi> = sum_i sqrt(mu_i) |ii>.
DensityMatrix pure_state_from_schmidt(const SchmidtVector& mu);

Matrix partial_trace_second(const Matrix& rho, int d);
Matrix partial_trace_first(const Matrix& rho, int d);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace isoeof
