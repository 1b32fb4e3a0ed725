#pragma once

#include <functional>
#include <vector>

#include "kur/graph.hpp"

namespace kur {

// Natural frequencies and coupling for dtheta_i/dt = omega_i + k sum_j A_ij sin(theta_j - theta_i).
struct ModelParams {
    std::vector<double> omega;
    double k = 1.0;

    static ModelParams homogeneous(int n) { return ModelParams{std::vector<double>(static_cast<std::size_t>(n), 0.0), 1.0}; }
};

inline constexpr double kDefaultStep = 0.05;
inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kDefaultMaxSteps = 200000;

double mean_frequency(const ModelParams& p);

// dtheta_i/dt for each node.
std::vector<double> kuramoto_rhs(const WeightedGraph& g, const PhaseState& s, const ModelParams& p);

// One classical RK4 step; the result is renormalized into [0, 2pi).
PhaseState step_rk4(const WeightedGraph& g, const PhaseState& s, const ModelParams& p, double h);

// Potential -sum_(i,j) w_ij cos(theta_j - theta_i); the homogeneous flow with
// k = 1 is its negative gradient.
double energy(const WeightedGraph& g, const PhaseState& s);

struct IntegrationResult {
    PhaseState state;  // canonically rotated at node 0
    bool converged = false;
    long steps = 0;
};

// step, energy, max |dtheta_i/dt - mean frequency|
using TraceFn = std::function<void(long, double, double)>;

// Steps until max_i |dtheta_i/dt - mean| < tol or max_steps is hit.  Throws
// NumericError when the state leaves the finite range (step size too large).
IntegrationResult integrate_to_convergence(const WeightedGraph& g, const PhaseState& s0,
                                           const ModelParams& p, double h = kDefaultStep,
                                           double tol = kDefaultTol, long max_steps = kDefaultMaxSteps,
                                           const TraceFn& trace = nullptr);

// Largest RK4 step that keeps the linearized flow stable on this graph,
// capped at the default step.
double stable_step(const WeightedGraph& g, double k = 1.0);

}  // namespace kur
