#include "kur/stability.hpp"

#include <cmath>

namespace kur {

Matrix jacobian(const WeightedGraph& g, const PhaseState& s) {
    if (s.size() != g.node_count()) throw std::invalid_argument("jacobian: state size does not match graph");
    int n = g.node_count();
    Matrix m(n, n, 0.0);
    for (const Edge& e : g.edges()) {
        double c = e.w * std::cos(s[e.j] - s[e.i]);
        m(e.i, e.j) += c;
        m(e.j, e.i) += c;
        m(e.i, e.i) -= c;
        m(e.j, e.j) -= c;
    }
    return m;
}

std::vector<double> eigen_symmetric(const Matrix& m) { return jacobi_eigenvalues(m); }

StabilityReport stability_verdict(const WeightedGraph& g, const PhaseState& s, double tol) {
    if (!g.is_connected())
        throw std::invalid_argument("stability_verdict: graph must be connected");
    StabilityReport rep;
    rep.spectrum = eigen_symmetric(jacobian(g, s));
    for (double ev : rep.spectrum)
        if (std::fabs(ev) <= tol) ++rep.zero_mode_count;

    int n = static_cast<int>(rep.spectrum.size());
    if (rep.spectrum.back() > tol) {
        rep.verdict = Verdict::Unstable;
    } else if (n == 1) {
        rep.verdict = Verdict::Stable;  // only the rotation mode exists
    } else {
        // spectrum.back() is the rotation zero mode; judge the rest.
        rep.verdict = rep.spectrum[static_cast<std::size_t>(n - 2)] < -tol ? Verdict::Stable : Verdict::Marginal;
    }
    return rep;
}

CutSums cut_check(const WeightedGraph& g, const PhaseState& s, const std::vector<int>& x) {
    if (s.size() != g.node_count()) throw std::invalid_argument("cut_check: state size does not match graph");
    std::vector<char> in_x(static_cast<std::size_t>(g.node_count()), 0);
    int count = 0;
    for (int v : x) {
        if (v < 0 || v >= g.node_count()) throw std::invalid_argument("cut_check: node index out of range");
        if (!in_x[static_cast<std::size_t>(v)]) {
            in_x[static_cast<std::size_t>(v)] = 1;
            ++count;
        }
    }
    if (count == 0 || count == g.node_count())
        throw std::invalid_argument("cut_check: subset must be proper and nonempty");

    CutSums sums;
    for (const Edge& e : g.edges()) {
        bool pi = in_x[static_cast<std::size_t>(e.i)];
        bool pj = in_x[static_cast<std::size_t>(e.j)];
        if (pi == pj) continue;
        // orient as (inside, outside): contribution sin(theta_out - theta_in)
        double d = pi ? s[e.j] - s[e.i] : s[e.i] - s[e.j];
        sums.sin_sum += e.w * std::sin(d);
        sums.cos_sum += e.w * std::cos(d);
    }
    return sums;
}

EdgeAngleClass edge_angle_check(const WeightedGraph& g, const PhaseState& s) {
    if (s.size() != g.node_count())
        throw std::invalid_argument("edge_angle_check: state size does not match graph");
    bool all_acute = true, all_obtuse = true;
    for (const Edge& e : g.edges()) {
        double d = std::fabs(circular_diff(s[e.j], s[e.i]));
        if (!(d < kPi / 2.0)) all_acute = false;
        if (!(d > kPi / 2.0)) all_obtuse = false;
    }
    if (all_acute) return EdgeAngleClass::AllAcute;  // vacuously acute with no edges
    if (all_obtuse) return EdgeAngleClass::AllObtuse;
    return EdgeAngleClass::Mixed;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "Stable";
        case Verdict::Unstable: return "Unstable";
        case Verdict::Marginal: return "Marginal";
    }
    return "?";
}

const char* to_string(EdgeAngleClass c) {
    switch (c) {
        case EdgeAngleClass::AllAcute: return "AllAcute";
        case EdgeAngleClass::AllObtuse: return "AllObtuse";
        case EdgeAngleClass::Mixed: return "Mixed";
    }
    return "?";
}

}  // namespace kur
