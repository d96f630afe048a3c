// The two-level branch family R_nm(F) behind the constrained entropy minimum
// on the simplex, its pointwise minimum R(F), closed forms for the minimal
// (1, d-1) branch, and a brute-force oracle minimizer that knows nothing
// about the branch reduction.
//
// A branch (n, m) is the candidate minimizer with n entries equal to gamma
// and m entries equal to delta, constrained by n g + m t = 1 and
// n sqrt(g) + m sqrt(t) = sqrt(dF); it is defined for F in [n/d, (n+m)/d].
#pragma once

#include <cstdint>
#include <vector>

#include "isoeof/entropy.hpp"

namespace isoeof {

/// Residual gate on the two branch constraints.
inline constexpr double kConstraintTol = 1e-10;
/// Radicand / delta values within this of 0 are clamped to 0 (domain ends).
inline constexpr double kRadicandClamp = 1e-12;
/// Branch values within this of each other tie; smaller n, then m, wins.
inline constexpr double kBranchTie = 1e-12;

struct Branch {
    int n, m, d;
    double domain_lo() const { return static_cast<double>(n) / d; }
    double domain_hi() const { return static_cast<double>(n + m) / d; }
    bool contains(double F) const {
        return F >= domain_lo() - kInvariantSlack && F <= domain_hi() + kInvariantSlack;
    }
};

/// All branches for local dimension d (n, m >= 1, n + m <= d), ordered by
/// ascending n then m. m = 0 branches are omitted: they pin F = n/d where
/// some (n', m') branch already takes the same value.
std::vector<Branch> branches_for(int d);

struct BranchEval {
    double F = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    EntropyValue value;
};

/// The + root of the constraint quadratic:
/// ((sqrt(dF) n + sqrt(m n (m+n-dF))) / (n(n+m)))^2.
/// Throws std::domain_error outside [n/d, (n+m)/d].
double gamma_plus(int n, int m, int d, double F);
/// The - root; gamma_minus(m, n, .) equals the + root's delta.
double gamma_minus(int n, int m, int d, double F);

/// R_nm(F) = H2(n g) + n g log2(n/m) + log2 m, cross-checked against the
/// direct form n h(g) + m h(t) within kConstraintTol.
BranchEval branch_value(int n, int m, int d, double F);

/// n h(g) + m h(t) evaluated at the - root; used by exchange-symmetry checks.
double branch_value_minus_bits(int n, int m, int d, double F);

struct RPoint {
    Branch branch;
    BranchEval eval;
};

/// Minimum of branch_value over all branches whose domain contains F.
RPoint r_pointwise_min(int d, double F);

/// Closed form of the minimal branch R_{1,d-1}(F) = H2(g) + (1-g) log2(d-1)
/// with g = (sqrt(F) + sqrt((d-1)(1-F)))^2 / d. Defined on [1/d, 1].
/// d = 2 reduces to H2(1/2 + sqrt(F(1-F))).
double r_value(int d, double F);
double r_gamma(int d, double F);

/// dR_{1,d-1}/dF by the chain rule; valid on the open interval (1/d, 1).
double r_derivative(int d, double F);

/// r_value sampled on the uniform closed grid over [1/d, 1].
/// The OpenMP variant and the serial reference agree bit-for-bit.
std::vector<double> r_values_on_grid(int d, int points);
std::vector<double> r_values_on_grid_serial(int d, int points);

/// F values of that grid (endpoints exactly 1/d and 1).
double grid_point(int d, int points, int index);

struct RnmRow {
    double F;
    int n, m;
    double r_bits;
};

/// Every branch sampled on a uniform grid over its own domain, in branch
/// order; the data product behind the curve-family plots.
std::vector<RnmRow> r_curve_rows(int d, int points);

/// Best-effort global minimum of H(mu) subject to sum mu_i = 1 and
/// sum sqrt(mu_i) = sqrt(dF), by random-restart projected gradient descent
/// in x_i = sqrt(mu_i). Independent of the branch machinery above; restarts
/// reduce by minimum, so the result is deterministic per (d, F, restarts, seed).
EntropyValue oracle_min_entropy(int d, double F, int restarts, std::uint64_t seed);
EntropyValue oracle_min_entropy_serial(int d, double F, int restarts, std::uint64_t seed);

}  // namespace isoeof
