#include "kur/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "kur/linalg.hpp"

namespace kur {

std::vector<double> residual(const WeightedGraph& g, const PhaseState& s, const ModelParams& p) {
    std::vector<double> r = kuramoto_rhs(g, s, p);
    const double wbar = mean_frequency(p);
    // rhs = omega_i + k * sum sin; rescale to sum sin - (wbar - omega_i)/k
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] - p.omega[i]) / p.k - (wbar - p.omega[i]) / p.k;
    return r;
}

namespace {

struct PolishOutcome {
    PhaseState state;
    double residual_norm = 0.0;
    int iterations = 0;
};

// Core Newton loop; returns the polished state without spectral analysis.
PolishOutcome newton_polish(const WeightedGraph& g, const PhaseState& s0, const ModelParams& p,
                            double tol, int max_iter) {
    const int n = g.node_count();
    PhaseState current = s0.canonical(0);
    for (int iter = 0; iter <= max_iter; ++iter) {
        std::vector<double> r = residual(g, current, p);
        double rn = 0.0;
        for (double v : r) rn = std::max(rn, std::fabs(v));
        if (rn < tol) return {current, rn, iter};
        if (iter == max_iter) break;

        Matrix m = jacobian(g, current);
        Matrix red(n - 1, n - 1);
        std::vector<double> rhs(static_cast<std::size_t>(n - 1));
        for (int a = 1; a < n; ++a) {
            rhs[static_cast<std::size_t>(a - 1)] = -r[static_cast<std::size_t>(a)];
            for (int b = 1; b < n; ++b) red(a - 1, b - 1) = m(a, b);
        }
        std::vector<double> delta;
        try {
            delta = lu_solve(std::move(red), std::move(rhs));
        } catch (const NumericError&) {
            throw NumericError("newton_refine: singular reduced Jacobian");
        }
        double dmax = 0.0;
        for (double v : delta) dmax = std::max(dmax, std::fabs(v));
        double scale = dmax > 1.0 ? 1.0 / dmax : 1.0;  // keep steps inside the basin
        std::vector<double> theta = current.angles();
        for (int a = 1; a < n; ++a) theta[static_cast<std::size_t>(a)] += scale * delta[static_cast<std::size_t>(a - 1)];
        current = PhaseState(std::move(theta)).canonical(0);
    }
    throw NumericError("newton_refine: no convergence");
}

FixedPointRecord make_record(const WeightedGraph& g, const PolishOutcome& out) {
    FixedPointRecord rec;
    rec.state = out.state;
    rec.residual_norm = out.residual_norm;
    rec.iterations = out.iterations;
    StabilityReport rep = stability_verdict(g, out.state);
    rec.spectrum = std::move(rep.spectrum);
    rec.verdict = rep.verdict;
    rec.classification = classify(out.state);
    return rec;
}

}  // namespace

FixedPointRecord newton_refine(const WeightedGraph& g, const PhaseState& s0, const ModelParams& p,
                               double tol, int max_iter) {
    if (!g.is_connected()) throw std::invalid_argument("newton_refine: graph must be connected");
    if (!(tol > 0.0)) throw std::invalid_argument("newton_refine: tolerance must be positive");
    if (s0.size() != g.node_count()) throw std::invalid_argument("newton_refine: state size does not match graph");
    return make_record(g, newton_polish(g, s0, p, tol, max_iter));
}

Classification classify(const PhaseState& s, double class_tol) {
    return 0.5 * circular_spread(s.angles()) < class_tol ? Classification::Zero : Classification::NonZero;
}

Classification classify(const FixedPointRecord& r, double class_tol) { return classify(r.state, class_tol); }

MultistartResult multistart_search(const WeightedGraph& g, const ModelParams& p, int samples,
                                   std::uint64_t seed, double tol,
                                   const std::vector<PhaseState>& extra_starts) {
    if (samples < 1) throw std::invalid_argument("multistart_search: samples must be >= 1");
    if (!g.is_connected()) throw std::invalid_argument("multistart_search: graph must be connected");
    const int n = g.node_count();
    const double h = stable_step(g, p.k);
    // The flow only has to enter the Newton basin; the polish restores the
    // requested tolerance.  Scale with the weights so heavy graphs do not
    // spend their time in the flat tail of the descent.
    const double flow_tol = 1e-5 * std::max(1.0, g.max_weighted_degree() * p.k);
    const long flow_cap = 30000;

    const int extras = static_cast<int>(extra_starts.size());
    const int total = extras + samples;
    std::vector<std::optional<PolishOutcome>> results(static_cast<std::size_t>(total));

    parallel_for(total, [&](int idx) {
        PhaseState start = idx < extras
                               ? extra_starts[static_cast<std::size_t>(idx)]
                               : PhaseState(random_phases(n, seed + static_cast<std::uint64_t>(idx - extras)));
        try {
            IntegrationResult flow = integrate_to_convergence(g, start, p, h, flow_tol, flow_cap);
            if (!flow.converged) return;
            results[static_cast<std::size_t>(idx)] = newton_polish(g, flow.state, p, tol, 50);
        } catch (const NumericError&) {
            // dropped: counted below
        }
    });

    MultistartResult out;
    out.samples = samples;
    std::vector<PolishOutcome> kept;
    for (auto& res : results) {
        if (!res) {
            ++out.dropped;
            continue;
        }
        bool duplicate = false;
        for (const auto& k : kept) {
            if (state_distance(k.state, res->state) < kDedupTol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) kept.push_back(std::move(*res));
    }
    out.records.reserve(kept.size());
    for (const auto& k : kept) out.records.push_back(make_record(g, k));
    return out;
}

const char* to_string(Classification c) {
    return c == Classification::Zero ? "Zero" : "NonZero";
}

}  // namespace kur
