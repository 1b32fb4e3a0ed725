#pragma once

#include <vector>

#include "kur/graph.hpp"
#include "kur/linalg.hpp"

namespace kur {

enum class Verdict { Stable, Unstable, Marginal };
enum class EdgeAngleClass { AllAcute, AllObtuse, Mixed };

inline constexpr double kStabilityTol = 1e-8;

struct StabilityReport {
    std::vector<double> spectrum;  // ascending
    int zero_mode_count = 0;       // |lambda| <= tol; at least 1 (global rotation)
    Verdict verdict = Verdict::Marginal;
};

// Linearization of the phase dynamics at s:
//   M_ij = w_ij cos(theta_j - theta_i)       (i != j)
//   M_ii = -sum_k w_ik cos(theta_k - theta_i)
// Independent of omega and k; symmetric; rows sum to zero.
Matrix jacobian(const WeightedGraph& g, const PhaseState& s);

// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> eigen_symmetric(const Matrix& m);

// Stable means negative definite orthogonal to the all-ones rotation mode:
// exactly one eigenvalue inside [-tol, tol] and the rest below -tol.
// Requires a connected graph (extra components add extra zero modes).
StabilityReport stability_verdict(const WeightedGraph& g, const PhaseState& s, double tol = kStabilityTol);

struct CutSums {
    double sin_sum = 0.0;
    double cos_sum = 0.0;
};

// Sums of w_ij sin/cos(theta_j - theta_i) over ordered cross pairs with
// i in X, j outside.  X must be a proper nonempty subset.
CutSums cut_check(const WeightedGraph& g, const PhaseState& s, const std::vector<int>& x);

// AllAcute when every edge difference is inside (-pi/2, pi/2) (sufficient for
// stability at a fixed point); AllObtuse when every edge is beyond (implies
// instability); Mixed otherwise.
EdgeAngleClass edge_angle_check(const WeightedGraph& g, const PhaseState& s);

const char* to_string(Verdict v);
const char* to_string(EdgeAngleClass c);

}  // namespace kur
