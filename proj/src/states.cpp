#include "isoeof/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isoeof {

namespace {

void check_density_invariants(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian (max deviation " +
                                    std::to_string(herm) + ")");
    const Complex tr = m.trace();
    if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) +
                                    " is not 1");
    const Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kPsdFloor)
        throw std::invalid_argument("DensityMatrix: minimum eigenvalue " +
                                    std::to_string(min_eig) + " below the PSD floor");
}

Eigen::VectorXcd max_entangled_ket(int d) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) psi(i * d + i) = amp;
    return psi;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) { check_density_invariants(mat_); }

IsotropicState::IsotropicState(int d_, double F_) : d(d_), F(F_) {
    if (d < 2) throw std::invalid_argument("IsotropicState: d must be >= 2");
    if (F < -kInvariantSlack || F > 1.0 + kInvariantSlack)
        throw std::invalid_argument("IsotropicState: F = " + std::to_string(F) +
                                    " outside [0, 1]");
    F = std::clamp(F, 0.0, 1.0);
}

DensityMatrix max_entangled_projector(int d) {
    if (d < 2) throw std::invalid_argument("max_entangled_projector: d must be >= 2");
    const Eigen::VectorXcd psi = max_entangled_ket(d);
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix isotropic_density(const IsotropicState& state) {
    const int n = state.d * state.d;
    const Matrix p = max_entangled_projector(state.d).mat();
    const double off = (1.0 - state.F) / (n - 1);
    Matrix m = off * (Matrix::Identity(n, n) - p) + state.F * p;
    return DensityMatrix(std::move(m));
}

double fidelity(const DensityMatrix& rho, int d) {
    if (rho.dim() != d * d)
        throw std::invalid_argument("fidelity: rho has dim " + std::to_string(rho.dim()) +
                                    ", expected " + std::to_string(d * d));
    Complex acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc += rho.mat()(i * d + i, j * d + j);
    return acc.real() / d;
}

DensityMatrix pure_state_from_schmidt(const SchmidtVector& mu) {
    const int d = mu.dim();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i) psi(i * d + i) = std::sqrt(mu[i]);
    return DensityMatrix(psi * psi.adjoint());
}

Matrix partial_trace_second(const Matrix& rho, int d) {
    if (rho.rows() != d * d || rho.cols() != d * d)
        throw std::invalid_argument("partial_trace_second: dimension mismatch");
    Matrix out = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out(i, j) += rho(i * d + k, j * d + k);
    return out;
}

Matrix partial_trace_first(const Matrix& rho, int d) {
    if (rho.rows() != d * d || rho.cols() != d * d)
        throw std::invalid_argument("partial_trace_first: dimension mismatch");
    Matrix out = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out(i, j) += rho(k * d + i, k * d + j);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const int ar = static_cast<int>(a.rows()), ac = static_cast<int>(a.cols());
    const int br = static_cast<int>(b.rows()), bc = static_cast<int>(b.cols());
    Matrix out(ar * br, ac * bc);
    for (int i = 0; i < ar; ++i)
        for (int j = 0; j < ac; ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

}  // namespace isoeof
