#include "kur/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace kur {

namespace {

void validate_positive_values(const std::vector<long long>& a) {
    if (a.empty()) throw std::invalid_argument("gadget: instance must be nonempty");
    for (long long v : a)
        if (v < 1) throw std::invalid_argument("gadget: values must be positive integers");
}

std::vector<char> subset_flags(std::size_t m, const std::vector<int>& subset) {
    std::vector<char> in_s(m, 0);
    for (int i : subset) {
        if (i < 0 || static_cast<std::size_t>(i) >= m)
            throw std::invalid_argument("gadget: subset index out of range");
        in_s[static_cast<std::size_t>(i)] = 1;
    }
    return in_s;
}

double max_abs_residual(const WeightedGraph& g, const PhaseState& s) {
    std::vector<double> r = residual(g, s, ModelParams::homogeneous(g.node_count()));
    double rn = 0.0;
    for (double v : r) rn = std::max(rn, std::fabs(v));
    return rn;
}

}  // namespace

Gadget build_weighted_gadget(const std::vector<long long>& a, double factor) {
    validate_positive_values(a);
    if (!(factor > 0.0)) throw std::invalid_argument("gadget: factor must be positive");
    const int m = static_cast<int>(a.size());
    long long total = 0;
    for (long long v : a) total += v;
    const double t = 0.5 * static_cast<double>(total);

    GadgetDescriptor desc;
    desc.x = 0;
    desc.y = 2 * m + 1;
    desc.values = a;
    desc.factor = factor;
    desc.t = t;
    desc.cliques.assign(static_cast<std::size_t>(m), {});
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * m));
    for (int i = 0; i < m; ++i) {
        int u = 1 + i;
        int v = 1 + m + i;
        desc.u.push_back(u);
        desc.v.push_back(v);
        double w = static_cast<double>(a[static_cast<std::size_t>(i)]);
        edges.push_back({desc.x, u, w});
        edges.push_back({u, v, w});
        edges.push_back({v, desc.y, factor * t * w});
    }
    return {WeightedGraph(2 * m + 2, std::move(edges)), std::move(desc)};
}

double weighted_gadget_alpha(double factor, double t) {
    const double ct = factor * t;
    if (!(2.0 * ct > 1.0 + 1e-12))
        throw NumericError("weighted gadget: balance has no interior root (factor*t too small)");
    // f(a) = ct sin(2a) - sin(a): positive near 0, -1 at pi/2
    auto f = [ct](double a) { return ct * std::sin(2.0 * a) - std::sin(a); };
    double lo = 1e-9, hi = kPi / 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    double alpha = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {  // Newton polish to machine precision
        double fp = 2.0 * ct * std::cos(2.0 * alpha) - std::cos(alpha);
        if (fp == 0.0) break;
        alpha -= f(alpha) / fp;
    }
    return alpha;
}

PhaseState weighted_gadget_phases(const GadgetDescriptor& desc, const std::vector<int>& subset) {
    const std::size_t m = desc.u.size();
    std::vector<char> in_s = subset_flags(m, subset);
    const double alpha = weighted_gadget_alpha(desc.factor, desc.t);
    std::vector<double> theta(2 * m + 2, 0.0);
    theta[static_cast<std::size_t>(desc.x)] = 0.0;
    theta[static_cast<std::size_t>(desc.y)] = kPi;
    for (std::size_t i = 0; i < m; ++i) {
        double sgn = in_s[i] ? 1.0 : -1.0;
        theta[static_cast<std::size_t>(desc.u[i])] = sgn * alpha;
        theta[static_cast<std::size_t>(desc.v[i])] = sgn * 2.0 * alpha;
    }
    return PhaseState(std::move(theta));
}

PhaseState weighted_gadget_fixed_point(const Gadget& gadget, const std::vector<int>& subset) {
    PhaseState s = weighted_gadget_phases(gadget.desc, subset);
    double rn = max_abs_residual(gadget.graph, s);
    if (rn > 1e-8) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "weighted gadget: subset is not a valid partition (residual %.3g)", rn);
        throw InvalidWitnessError(buf);
    }
    return s;
}

WeightedGraph build_clique_blowup(const std::vector<long long>& a, long long sum_bound) {
    validate_positive_values(a);
    long long total = 0;
    for (long long v : a) total += v;
    if (total > sum_bound) throw std::invalid_argument("clique blowup: sum exceeds configured bound");

    const int m = static_cast<int>(a.size());
    std::vector<std::vector<int>> u_group(static_cast<std::size_t>(m)), v_group(static_cast<std::size_t>(m));
    int next = 1;  // x = 0
    for (int i = 0; i < m; ++i) {
        for (long long k = 0; k < a[static_cast<std::size_t>(i)]; ++k) u_group[static_cast<std::size_t>(i)].push_back(next++);
        for (long long k = 0; k < a[static_cast<std::size_t>(i)]; ++k) v_group[static_cast<std::size_t>(i)].push_back(next++);
    }
    const int x = 0;
    const int y = next++;

    std::vector<Edge> edges;
    auto add = [&edges](int p, int q) {
        edges.push_back({std::min(p, q), std::max(p, q), 1.0});
    };
    for (int i = 0; i < m; ++i) {
        const auto& us = u_group[static_cast<std::size_t>(i)];
        const auto& vs = v_group[static_cast<std::size_t>(i)];
        for (int un : us) add(x, un);
        for (int vn : vs) add(vn, y);
        for (std::size_t p = 0; p < us.size(); ++p)
            for (std::size_t q = p + 1; q < us.size(); ++q) add(us[p], us[q]);
        for (std::size_t p = 0; p < vs.size(); ++p)
            for (std::size_t q = p + 1; q < vs.size(); ++q) add(vs[p], vs[q]);
        for (int un : us)
            for (int vn : vs) add(un, vn);
    }
    return WeightedGraph(next, std::move(edges));
}

Gadget build_unweighted_gadget(int n, const std::vector<long long>& b) {
    // reuse the Kuramoto instance validation, then pad
    if (n < 2) throw std::invalid_argument("unweighted gadget: n must be at least 2");
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("unweighted gadget: expected n values");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 2 || b[i] > n)
            throw std::invalid_argument("unweighted gadget: values must satisfy 2 <= b_i <= n");
        if (i > 0 && b[i] < b[i - 1])
            throw std::invalid_argument("unweighted gadget: values must be nondecreasing");
    }
    std::vector<long long> padded = b;
    padded.resize(static_cast<std::size_t>(3 * n), n);
    const int big_n = 3 * n;

    GadgetDescriptor desc;
    desc.x = 0;
    desc.y = 6 * n + 1;
    desc.n_param = n;
    desc.values = padded;
    int next = 6 * n + 2;
    std::vector<Edge> edges;
    for (int i = 0; i < big_n; ++i) {
        int u = 1 + i;
        int v = 3 * n + 1 + i;
        desc.u.push_back(u);
        desc.v.push_back(v);
        std::vector<int> clique;
        for (long long k = 0; k < padded[static_cast<std::size_t>(i)]; ++k) clique.push_back(next++);
        edges.push_back({desc.x, u, 1.0});
        edges.push_back({v, desc.y, 1.0});
        for (std::size_t p = 0; p < clique.size(); ++p) {
            edges.push_back({u, clique[p], 1.0});
            edges.push_back({v, clique[p], 1.0});
            for (std::size_t q = p + 1; q < clique.size(); ++q)
                edges.push_back({clique[p], clique[q], 1.0});
        }
        desc.cliques.push_back(std::move(clique));
    }
    return {WeightedGraph(next, std::move(edges)), std::move(desc)};
}

PhaseState unweighted_gadget_phases(const GadgetDescriptor& desc, const std::vector<int>& subset, double eps) {
    const std::size_t big_n = desc.u.size();
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("unweighted gadget: eps must be in [0, 1)");
    std::vector<char> in_s = subset_flags(big_n, subset);
    const double gamma = 2.0 * std::acos(eps);

    int node_count = desc.y + 1;
    for (const auto& c : desc.cliques) node_count += static_cast<int>(c.size());
    std::vector<double> theta(static_cast<std::size_t>(node_count), 0.0);
    theta[static_cast<std::size_t>(desc.x)] = 0.0;
    theta[static_cast<std::size_t>(desc.y)] = gamma;
    for (std::size_t i = 0; i < big_n; ++i) {
        bool side_s = in_s[i] != 0;
        double alpha = std::asin(kuramoto_partition_term(desc.values[i], eps, side_s));
        double beta = side_s ? gamma / 2.0 - alpha : kPi - gamma / 2.0 - alpha;
        double sgn = side_s ? 1.0 : -1.0;
        theta[static_cast<std::size_t>(desc.u[i])] = sgn * alpha;
        theta[static_cast<std::size_t>(desc.v[i])] = sgn * (alpha + 2.0 * beta);
        for (int c : desc.cliques[i]) theta[static_cast<std::size_t>(c)] = sgn * (alpha + beta);
    }
    return PhaseState(std::move(theta));
}

PhaseState unweighted_gadget_fixed_point(const Gadget& gadget, const std::vector<int>& subset, double eps) {
    if (gadget.desc.n_param < 2) throw std::invalid_argument("unweighted gadget: descriptor missing n");
    if (!(eps >= 0.0 && eps < 1.0 / gadget.desc.n_param))
        throw std::invalid_argument("unweighted gadget: eps must be in [0, 1/n)");
    PhaseState s = unweighted_gadget_phases(gadget.desc, subset, eps);
    double rn = max_abs_residual(gadget.graph, s);
    if (rn > 1e-8) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "unweighted gadget: (subset, eps) is not a valid witness (residual %.3g)", rn);
        throw InvalidWitnessError(buf);
    }
    return s;
}

UnweightedWitness extract_unweighted_witness(const Gadget& gadget, const PhaseState& s) {
    const GadgetDescriptor& desc = gadget.desc;
    PhaseState canon = s.canonical(desc.x);
    double gamma = canon[desc.y];
    bool mirrored = gamma > kPi;
    if (mirrored) gamma = kTwoPi - gamma;
    UnweightedWitness w;
    w.eps = std::cos(gamma / 2.0);
    for (std::size_t i = 0; i < desc.u.size(); ++i) {
        double d = circular_diff(canon[desc.u[i]], 0.0);
        if (mirrored) d = -d;
        if (d > 0.0) w.subset.push_back(static_cast<int>(i));
    }
    return w;
}

std::string serialize_gadget(const Gadget& gadget) {
    std::ostringstream out;
    out << gadget.graph.serialize();
    const GadgetDescriptor& d = gadget.desc;
    out << "# gadget " << (d.n_param > 0 ? "unweighted" : "weighted") << " values=";
    for (std::size_t i = 0; i < d.values.size(); ++i) out << (i ? "," : "") << d.values[i];
    if (d.n_param > 0) out << " n=" << d.n_param;
    if (d.factor > 0.0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " factor=%.17g t=%.17g", d.factor, d.t);
        out << buf;
    }
    out << "\n";
    out << "# role x " << d.x << "\n";
    out << "# role y " << d.y << "\n";
    for (std::size_t i = 0; i < d.u.size(); ++i)
        out << "# role u " << d.u[i] << " " << (i + 1) << "\n";
    for (std::size_t i = 0; i < d.v.size(); ++i)
        out << "# role v " << d.v[i] << " " << (i + 1) << "\n";
    for (std::size_t i = 0; i < d.cliques.size(); ++i)
        for (int c : d.cliques[i])
            out << "# role C " << c << " " << (i + 1) << "\n";
    return out.str();
}

namespace {

FixedPointRecord analytic_record(const WeightedGraph& g, const PhaseState& s) {
    FixedPointRecord rec;
    rec.state = s.canonical(0);
    rec.residual_norm = max_abs_residual(g, rec.state);
    StabilityReport rep = stability_verdict(g, rec.state);
    rec.spectrum = std::move(rep.spectrum);
    rec.verdict = rep.verdict;
    rec.classification = classify(rec.state);
    return rec;
}

void tally(ReductionReport& rep, MultistartResult ms) {
    rep.samples = ms.samples;
    rep.dropped = ms.dropped;
    for (const auto& rec : ms.records) {
        switch (rec.verdict) {
            case Verdict::Stable:
                (rec.classification == Classification::Zero ? rep.stable_zero : rep.stable_nonzero)++;
                break;
            case Verdict::Unstable: rep.unstable++; break;
            case Verdict::Marginal: rep.marginal++; break;
        }
    }
    rep.records = std::move(ms.records);
}

void finish_consistency(ReductionReport& rep) {
    if (rep.partition.answer == PartitionAnswer::NotFound) {
        rep.determinable = false;
        rep.consistent = false;
        return;
    }
    if (rep.partition.answer == PartitionAnswer::Yes) {
        rep.consistent = rep.analytic.has_value() &&
                         rep.analytic->classification == Classification::NonZero &&
                         rep.analytic->residual_norm < 1e-9 &&
                         rep.analytic->verdict == Verdict::Stable;
    } else {
        rep.consistent = rep.stable_nonzero == 0;
    }
}

}  // namespace

ReductionReport verify_reduction_weighted(const std::vector<long long>& a, int samples,
                                          std::uint64_t seed, double factor) {
    ReductionReport rep;
    rep.variant = GadgetVariant::Weighted;
    rep.values = a;
    rep.factor = factor;

    auto sol = solve_partition_dp(a);
    rep.partition.answer = sol ? PartitionAnswer::Yes : PartitionAnswer::No;
    rep.partition.solution = sol;
    rep.partition.definitive = true;

    Gadget gadget = build_weighted_gadget(a, factor);
    if (sol) rep.analytic = analytic_record(gadget.graph, weighted_gadget_fixed_point(gadget, sol->subset));

    // Structure-aware extra starts: the analytic construction at every subset
    // (small instances), so an existing witness is found deterministically.
    std::vector<PhaseState> extras;
    const int m = static_cast<int>(a.size());
    if (m <= 9) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            extras.push_back(weighted_gadget_phases(gadget.desc, subset));
        }
    } else if (sol) {
        extras.push_back(weighted_gadget_phases(gadget.desc, sol->subset));
    }

    MultistartResult ms = multistart_search(gadget.graph, ModelParams::homogeneous(gadget.graph.node_count()),
                                            samples, seed, kDefaultTol, extras);
    tally(rep, std::move(ms));
    finish_consistency(rep);
    return rep;
}

ReductionReport verify_reduction_unweighted(int n, const std::vector<long long>& b, int samples,
                                            std::uint64_t seed) {
    if (3 * n > 24)
        throw std::invalid_argument("verify: unweighted instances need 3n <= 24 for a definitive answer");
    ReductionReport rep;
    rep.variant = GadgetVariant::Unweighted;
    rep.values = b;
    rep.n_param = n;
    rep.partition = kuramoto_partition_feasible(n, b);

    Gadget gadget = build_unweighted_gadget(n, b);
    if (rep.partition.answer == PartitionAnswer::Yes) {
        const auto& sol = *rep.partition.solution;
        rep.analytic = analytic_record(gadget.graph,
                                       unweighted_gadget_fixed_point(gadget, sol.subset, sol.epsilon));
    }

    // Extra starts: every subset evaluated at its bisected eps when the gates
    // open (eps = 0 otherwise).
    std::vector<PhaseState> extras;
    const int big_n = 3 * n;
    if (big_n <= 9) {
        std::vector<long long> padded = b;
        padded.resize(static_cast<std::size_t>(big_n), n);
        for (std::uint32_t mask = 0; mask < (1u << big_n); ++mask) {
            std::vector<int> subset;
            std::vector<char> in_s(static_cast<std::size_t>(big_n), 0);
            for (int i = 0; i < big_n; ++i)
                if (mask & (1u << i)) {
                    subset.push_back(i);
                    in_s[static_cast<std::size_t>(i)] = 1;
                }
            double eps = 0.0;
            double d0 = kuramoto_partition_balance(padded, in_s, 0.0);
            double d1 = kuramoto_partition_balance(padded, in_s, 1.0 / n);
            if (d0 >= 0.0 && d1 < 0.0) {
                double lo = 0.0, hi = 1.0 / n;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (lo + hi);
                    (kuramoto_partition_balance(padded, in_s, mid) > 0.0 ? lo : hi) = mid;
                }
                eps = lo;
            }
            extras.push_back(unweighted_gadget_phases(gadget.desc, subset, eps));
        }
    } else if (rep.partition.answer == PartitionAnswer::Yes) {
        extras.push_back(unweighted_gadget_phases(gadget.desc, rep.partition.solution->subset,
                                                  rep.partition.solution->epsilon));
    }

    MultistartResult ms = multistart_search(gadget.graph, ModelParams::homogeneous(gadget.graph.node_count()),
                                            samples, seed, kDefaultTol, extras);
    tally(rep, std::move(ms));
    finish_consistency(rep);
    return rep;
}

}  // namespace kur
