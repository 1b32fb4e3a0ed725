#include "kur/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace kur {

namespace {

void check_sizes(const WeightedGraph& g, std::size_t state_size, const ModelParams& p) {
    if (state_size != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("dynamics: state size does not match graph");
    if (p.omega.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("dynamics: omega size does not match graph");
    if (!(p.k > 0.0)) throw std::invalid_argument("dynamics: coupling k must be positive");
}

// Edge-based accumulation: each edge contributes +kw sin(d) to one node and
// -kw sin(d) to the other, so the pairwise cancellation of equation-sum
// arguments is exact.
void rhs_raw(const WeightedGraph& g, const double* theta, const ModelParams& p, double* out) {
    std::copy(p.omega.begin(), p.omega.end(), out);
    for (const Edge& e : g.edges()) {
        double t = p.k * e.w * std::sin(theta[e.j] - theta[e.i]);
        out[e.i] += t;
        out[e.j] -= t;
    }
}

}  // namespace

double mean_frequency(const ModelParams& p) {
    if (p.omega.empty()) return 0.0;
    double s = 0.0;
    for (double w : p.omega) s += w;
    return s / static_cast<double>(p.omega.size());
}

std::vector<double> kuramoto_rhs(const WeightedGraph& g, const PhaseState& s, const ModelParams& p) {
    check_sizes(g, s.angles().size(), p);
    std::vector<double> out(s.angles().size());
    rhs_raw(g, s.angles().data(), p, out.data());
    return out;
}

namespace {

// k1 must already hold the rhs at theta.
void rk4_step_raw(const WeightedGraph& g, const ModelParams& p, double h, std::vector<double>& theta,
                  const std::vector<double>& k1, std::vector<double>& k2, std::vector<double>& k3,
                  std::vector<double>& k4, std::vector<double>& tmp) {
    const std::size_t n = theta.size();
    for (std::size_t i = 0; i < n; ++i) tmp[i] = theta[i] + 0.5 * h * k1[i];
    rhs_raw(g, tmp.data(), p, k2.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = theta[i] + 0.5 * h * k2[i];
    rhs_raw(g, tmp.data(), p, k3.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = theta[i] + h * k3[i];
    rhs_raw(g, tmp.data(), p, k4.data());
    for (std::size_t i = 0; i < n; ++i)
        theta[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

PhaseState step_rk4(const WeightedGraph& g, const PhaseState& s, const ModelParams& p, double h) {
    check_sizes(g, s.angles().size(), p);
    if (!(h > 0.0)) throw std::invalid_argument("step_rk4: step must be positive");
    std::vector<double> theta = s.angles();
    std::vector<double> k1(theta.size()), k2(theta.size()), k3(theta.size()), k4(theta.size()), tmp(theta.size());
    rhs_raw(g, theta.data(), p, k1.data());
    rk4_step_raw(g, p, h, theta, k1, k2, k3, k4, tmp);
    return PhaseState(std::move(theta));
}

double energy(const WeightedGraph& g, const PhaseState& s) {
    if (s.size() != g.node_count()) throw std::invalid_argument("energy: state size does not match graph");
    double e = 0.0;
    for (const Edge& edge : g.edges()) e -= edge.w * std::cos(s[edge.j] - s[edge.i]);
    return e;
}

IntegrationResult integrate_to_convergence(const WeightedGraph& g, const PhaseState& s0,
                                           const ModelParams& p, double h, double tol, long max_steps,
                                           const TraceFn& trace) {
    check_sizes(g, s0.angles().size(), p);
    if (!(h > 0.0)) throw std::invalid_argument("integrate: step must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    const double wbar = mean_frequency(p);
    std::vector<double> theta = s0.angles();
    const std::size_t n = theta.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    for (long step = 0; step <= max_steps; ++step) {
        rhs_raw(g, theta.data(), p, k1.data());
        double dev = 0.0;
        for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::fabs(k1[i] - wbar));
        if (trace) trace(step, energy(g, PhaseState(theta)), dev);
        if (dev < tol) return {PhaseState(theta).canonical(0), true, step};
        if (step == max_steps) break;
        rk4_step_raw(g, p, h, theta, k1, k2, k3, k4, tmp);
        // No wrapping here: an RK4 step beyond the stability interval grows
        // the state geometrically, and overflow to non-finite is the signal.
        for (double v : theta)
            if (!std::isfinite(v)) throw NumericError("integrate: non-finite state (step size too large)");
    }
    return {PhaseState(theta).canonical(0), false, max_steps};
}

double stable_step(const WeightedGraph& g, double k) {
    // Gershgorin: the Jacobian spectrum lies within 2 k max_i sum_j w_ij in
    // magnitude; the RK4 real stability interval ends near 2.785.
    double bound = 2.0 * k * g.max_weighted_degree();
    if (bound <= 0.0) return kDefaultStep;
    return std::min(kDefaultStep, 2.5 / bound);
}

}  // namespace kur
