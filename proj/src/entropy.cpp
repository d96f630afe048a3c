#include "isoeof/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace isoeof {

double EntropyValue::nats() const { return bits * std::numbers::ln2; }

double entropy_term(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

SchmidtVector::SchmidtVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("SchmidtVector: empty entry list");
    double sum = 0.0;
    for (double& e : entries_) {
        if (e < -1e-15)
            throw std::invalid_argument("SchmidtVector: negative entry " + std::to_string(e));
        if (e < 0.0) e = 0.0;
        sum += e;
    }
    if (std::abs(sum - 1.0) > kNormalizationGate)
        throw std::invalid_argument("SchmidtVector: entries sum to " + std::to_string(sum) +
                                    ", beyond the normalization gate");
    for (double& e : entries_) e /= sum;
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

SchmidtVector SchmidtVector::uniform(int dim) {
    if (dim < 1) throw std::invalid_argument("SchmidtVector::uniform: dim must be >= 1");
    return SchmidtVector(std::vector<double>(static_cast<std::size_t>(dim), 1.0 / dim));
}

SchmidtVector SchmidtVector::basis_state(int dim) {
    if (dim < 1) throw std::invalid_argument("SchmidtVector::basis_state: dim must be >= 1");
    std::vector<double> e(static_cast<std::size_t>(dim), 0.0);
    e[0] = 1.0;
    return SchmidtVector(std::move(e));
}

EntropyValue shannon_entropy(const SchmidtVector& mu) {
    double bits = 0.0;
    for (double e : mu.entries()) bits += entropy_term(e);
    return {bits};
}

EntropyValue binary_entropy(double x) {
    if (x < -kInvariantSlack || x > 1.0 + kInvariantSlack)
        throw std::domain_error("binary_entropy: argument " + std::to_string(x) +
                                " outside [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    return {entropy_term(x) + entropy_term(1.0 - x)};
}

double fraction_of_schmidt(const SchmidtVector& mu) {
    double s = 0.0;
    for (double e : mu.entries()) s += std::sqrt(e);
    return s * s / mu.dim();
}

EntropyValue pure_state_entanglement(const SchmidtVector& mu) { return shannon_entropy(mu); }

}  // namespace isoeof
