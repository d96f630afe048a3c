// Scalar building blocks shared by every other component: Shannon and binary
// entropies over probability vectors, and the maximally-entangled-fraction
// functional of a Schmidt vector. All entropies are base 2 (one EPR pair = 1);
// EntropyValue::nats() converts for display only.
#pragma once

#include <vector>

namespace isoeof {

/// Slack allowed on exact identities (sums to one, domain endpoints).
inline constexpr double kInvariantSlack = 1e-12;
/// Max |sum - 1| silently renormalized on SchmidtVector construction.
inline constexpr double kNormalizationGate = 1e-9;

/// Base-2 entropy amount, in bits.
struct EntropyValue {
    double bits = 0.0;
    double nats() const;
};

/// -x log2(x), with the limit convention h(0) = 0.
double entropy_term(double x);

/// Probability vector on the d-simplex, stored sorted in non-increasing
/// order. Construction renormalizes sums within kNormalizationGate of 1 and
/// rejects anything further off; negative entries are rejected.
class SchmidtVector {
public:
    explicit SchmidtVector(std::vector<double> entries);
    static SchmidtVector uniform(int dim);
    static SchmidtVector basis_state(int dim);  // {1, 0, ..., 0}

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<double>& entries() const { return entries_; }
    double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

private:
    std::vector<double> entries_;
};

/// H(mu) = sum_i -mu_i log2 mu_i.
EntropyValue shannon_entropy(const SchmidtVector& mu);

/// H2(x) = -x log2 x - (1-x) log2(1-x); endpoints return exactly 0.
/// Throws std::domain_error when x is outside [0,1] beyond kInvariantSlack.
EntropyValue binary_entropy(double x);

/// F = (sum_i sqrt(mu_i))^2 / d, the best maximally entangled fraction
/// reachable from mu by twirling. Always in [1/d, 1].
double fraction_of_schmidt(const SchmidtVector& mu);

/// Entanglement of the pure state with Schmidt vector mu; equals the Shannon
/// entropy of mu (the reduced state is diagonal with entries mu_i).
EntropyValue pure_state_entanglement(const SchmidtVector& mu);

}  // namespace isoeof
