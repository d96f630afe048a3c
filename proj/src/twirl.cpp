#include "isoeof/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isoeof/rng.hpp"

namespace isoeof {

namespace {

// Samples per accumulation chunk. Chunk boundaries depend only on the sample
// count, which pins the reduction order independently of thread count.
constexpr int kChunkSamples = 32;

struct Accumulator {
    Matrix sum;          // entrywise complex sum of samples
    Eigen::MatrixXd sq;  // entrywise sum of |entry|^2, for the variance estimate

    explicit Accumulator(int n) : sum(Matrix::Zero(n, n)), sq(Eigen::MatrixXd::Zero(n, n)) {}
    void reset() {
        sum.setZero();
        sq.setZero();
    }
    void add(const Matrix& s) {
        sum += s;
        sq += s.cwiseAbs2();
    }
    void merge(const Accumulator& other) {
        sum += other.sum;
        sq += other.sq;
    }
};

Matrix sample_twirl(const Matrix& rho, int d, std::uint64_t seed, const Matrix* premul) {
    Matrix u = haar_random_unitary(d, seed).mat();
    if (premul) u = (*premul) * u;
    const Matrix w = kron(u, u.conjugate());
    return w * rho * w.adjoint();
}

double fidelity_raw(const Matrix& rho, int d) {
    Complex acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc += rho(i * d + i, j * d + j);
    return acc.real() / d;
}

TwirlReport assemble_report(const Matrix& rho, int d, int samples, const Accumulator& acc) {
    const Matrix avg = acc.sum / static_cast<double>(samples);

    const double exact_f = std::clamp(fidelity_raw(rho, d), 0.0, 1.0);
    DensityMatrix closed = isotropic_density(IsotropicState(d, exact_f));

    double std_error = 0.0;
    if (samples >= 2) {
        const Eigen::MatrixXd centered =
            acc.sq - static_cast<double>(samples) * avg.cwiseAbs2();
        const double total_var = std::max(0.0, centered.sum()) / (samples - 1);
        std_error = std::sqrt(total_var / samples);
    }

    const double distance = (avg - closed.mat()).norm();
    const double estimated_f = fidelity_raw(avg, d);
    return TwirlReport{samples,     DensityMatrix(avg), std::move(closed), distance,
                       estimated_f, exact_f,            std_error};
}

TwirlReport monte_carlo_impl(const DensityMatrix& rho, int d, int samples, std::uint64_t seed,
                             const Matrix* premul, bool parallel) {
    if (d < 2) throw std::invalid_argument("twirl_monte_carlo: d must be >= 2");
    if (rho.dim() != d * d)
        throw std::invalid_argument("twirl_monte_carlo: rho has dim " +
                                    std::to_string(rho.dim()) + ", expected " +
                                    std::to_string(d * d));
    if (samples < 1) throw std::invalid_argument("twirl_monte_carlo: samples must be >= 1");

    const int n = d * d;
    const Matrix& r = rho.mat();
    Accumulator total(n);

    if (!parallel) {
        for (int k = 0; k < samples; ++k) total.add(sample_twirl(r, d, child_seed(seed, k), premul));
        return assemble_report(r, d, samples, total);
    }

    const int nchunks = (samples + kChunkSamples - 1) / kChunkSamples;
#pragma omp parallel
    {
        Accumulator local(n);
#pragma omp for ordered schedule(static, 1)
        for (int c = 0; c < nchunks; ++c) {
            local.reset();
            const int lo = c * kChunkSamples;
            const int hi = std::min(samples, lo + kChunkSamples);
            for (int k = lo; k < hi; ++k)
                local.add(sample_twirl(r, d, child_seed(seed, k), premul));
#pragma omp ordered
            total.merge(local);
        }
    }
    return assemble_report(r, d, samples, total);
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Matrix u) : mat_(std::move(u)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
    const int n = static_cast<int>(mat_.rows());
    const double dev = (mat_ * mat_.adjoint() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > kUnitaryTol)
        throw std::invalid_argument("UnitaryMatrix: U U^dagger deviates from identity by " +
                                    std::to_string(dev));
}

UnitaryMatrix haar_random_unitary(int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("haar_random_unitary: d must be >= 1");
    auto engine = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double re = gauss(engine);
            const double im = gauss(engine);
            z(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const double mag = std::abs(rmat(j, j));
        const Complex phase = mag > 0.0 ? rmat(j, j) / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return UnitaryMatrix(std::move(q));
}

DensityMatrix twirl_once(const DensityMatrix& rho, const UnitaryMatrix& u) {
    const int d = u.dim();
    if (rho.dim() != d * d)
        throw std::invalid_argument("twirl_once: rho dim " + std::to_string(rho.dim()) +
                                    " does not match U dim " + std::to_string(d) + " squared");
    const Matrix w = kron(u.mat(), u.mat().conjugate());
    return DensityMatrix(w * rho.mat() * w.adjoint());
}

IsotropicState twirl_closed_form(const SchmidtVector& mu, const UnitaryMatrix& v) {
    if (v.dim() != mu.dim())
        throw std::invalid_argument("twirl_closed_form: V dim does not match mu dim");
    Complex s = 0.0;
    for (int i = 0; i < mu.dim(); ++i) s += std::sqrt(mu[i]) * v.mat()(i, i);
    const double f = std::clamp(std::norm(s) / mu.dim(), 0.0, 1.0);
    return IsotropicState(mu.dim(), f);
}

TwirlReport twirl_monte_carlo(const DensityMatrix& rho, int d, int samples, std::uint64_t seed) {
    return monte_carlo_impl(rho, d, samples, seed, nullptr, true);
}

TwirlReport twirl_monte_carlo_serial(const DensityMatrix& rho, int d, int samples,
                                     std::uint64_t seed) {
    return monte_carlo_impl(rho, d, samples, seed, nullptr, false);
}

TwirlReport twirl_monte_carlo_premultiplied(const DensityMatrix& rho, int d, int samples,
                                            std::uint64_t seed, const UnitaryMatrix& w) {
    const Matrix pre = w.mat();
    return monte_carlo_impl(rho, d, samples, seed, &pre, true);
}

}  // namespace isoeof
