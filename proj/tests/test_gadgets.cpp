#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kur/gadgets.hpp"
#include "oracles.hpp"

using namespace kur;

namespace {

double max_residual(const WeightedGraph& g, const PhaseState& s) {
    auto r = residual(g, s, ModelParams::homogeneous(g.node_count()));
    double rn = 0.0;
    for (double v : r) rn = std::max(rn, std::fabs(v));
    return rn;
}

std::multiset<std::pair<std::pair<int, int>, double>> edge_multiset(const WeightedGraph& g) {
    std::multiset<std::pair<std::pair<int, int>, double>> out;
    for (const Edge& e : g.edges()) out.insert({{e.i, e.j}, e.w});
    return out;
}

// every multiset of m values from 1..max_value, ordered nondecreasing
void for_each_multiset(int m, int max_value, const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> vals(static_cast<std::size_t>(m), 1);
    for (;;) {
        fn(vals);
        int k = m - 1;
        while (k >= 0 && vals[static_cast<std::size_t>(k)] == max_value) --k;
        if (k < 0) return;
        long long next = vals[static_cast<std::size_t>(k)] + 1;
        for (int i = k; i < m; ++i) vals[static_cast<std::size_t>(i)] = next;
    }
}

}  // namespace

TEST_CASE("build_weighted_gadget on the stated instances") {
    Gadget g11 = build_weighted_gadget({1, 1}, 2.0);
    CHECK(g11.graph.node_count() == 6);
    CHECK(g11.graph.edge_count() == 6);
    CHECK(g11.desc.t == doctest::Approx(1.0));
    std::multiset<double> weights;
    for (const Edge& e : g11.graph.edges()) weights.insert(e.w);
    CHECK(weights == std::multiset<double>{1.0, 1.0, 1.0, 1.0, 2.0, 2.0});

    Gadget g3111 = build_weighted_gadget({3, 1, 1, 1}, 2.0);
    CHECK(g3111.graph.node_count() == 10);
    CHECK(g3111.desc.t == doctest::Approx(3.0));
    std::multiset<double> vy;
    for (std::size_t i = 0; i < g3111.desc.v.size(); ++i)
        for (auto& [nb, w] : g3111.graph.neighbors(g3111.desc.v[i]))
            if (nb == g3111.desc.y) vy.insert(w);
    CHECK(vy == std::multiset<double>{6.0, 6.0, 6.0, 18.0});

    Gadget path = build_weighted_gadget({1}, 2.0);
    CHECK(path.graph.node_count() == 4);
    CHECK(path.desc.t == doctest::Approx(0.5));
    for (const Edge& e : path.graph.edges()) CHECK(e.w == 1.0);
}

TEST_CASE("gadget descriptors cover all nodes with disjoint roles") {
    for (const Gadget& g : {build_weighted_gadget({3, 1, 2}), build_unweighted_gadget(2, {2, 2})}) {
        std::vector<int> seen(static_cast<std::size_t>(g.graph.node_count()), 0);
        seen[static_cast<std::size_t>(g.desc.x)]++;
        seen[static_cast<std::size_t>(g.desc.y)]++;
        for (int u : g.desc.u) seen[static_cast<std::size_t>(u)]++;
        for (int v : g.desc.v) seen[static_cast<std::size_t>(v)]++;
        for (const auto& clique : g.desc.cliques)
            for (int c : clique) seen[static_cast<std::size_t>(c)]++;
        for (int count : seen) CHECK(count == 1);
    }
}

TEST_CASE("weighted gadget alpha solves the balance and matches arccos(1/(2ct))") {
    for (double c : {1.0, 2.0, 3.0}) {
        for (double t : {1.0, 2.5, 13.0}) {
            double alpha = weighted_gadget_alpha(c, t);
            CHECK(std::fabs(c * t * std::sin(kPi - 2.0 * alpha) - std::sin(alpha)) < 1e-12);
            CHECK(alpha == doctest::Approx(std::acos(1.0 / (2.0 * c * t))).epsilon(1e-12));
        }
    }
    // c = 1 with t = 1 reproduces the arccos(1/2) = pi/3 configuration
    CHECK(weighted_gadget_alpha(1.0, 1.0) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    // degenerate: 2ct <= 1 has no interior root
    CHECK_THROWS_AS(weighted_gadget_alpha(1.0, 0.5), NumericError);
}

TEST_CASE("weighted_gadget_fixed_point builds a stable non-zero witness") {
    Gadget g = build_weighted_gadget({1, 1}, 2.0);
    PhaseState s = weighted_gadget_fixed_point(g, {0});
    double alpha = std::acos(0.25);
    CHECK(s[g.desc.u[0]] == doctest::Approx(alpha).epsilon(1e-12));
    CHECK(s[g.desc.v[0]] == doctest::Approx(2.0 * alpha).epsilon(1e-12));
    CHECK(s[g.desc.u[1]] == doctest::Approx(kTwoPi - alpha).epsilon(1e-12));
    CHECK(max_residual(g.graph, s) < 1e-12);
    CHECK(stability_verdict(g.graph, s).verdict == Verdict::Stable);
    CHECK(edge_angle_check(g.graph, s) == EdgeAngleClass::AllAcute);
    CHECK(classify(s) == Classification::NonZero);
}

TEST_CASE("weighted_gadget_fixed_point rejects invalid partitions") {
    Gadget g = build_weighted_gadget({2, 1}, 2.0);
    CHECK_THROWS_AS(weighted_gadget_fixed_point(g, {1}), InvalidWitnessError);
    // the unchecked construction still exists for search seeding
    PhaseState raw = weighted_gadget_phases(g.desc, {1});
    CHECK(max_residual(g.graph, raw) > 1e-3);
}

TEST_CASE("analytic weighted witnesses are sound across small partitionable instances") {
    for (int m = 2; m <= 8; ++m) {
        for_each_multiset(m, 9, [&](const std::vector<long long>& vals) {
            auto sol = solve_partition_dp(vals);
            if (!sol) return;
            Gadget g = build_weighted_gadget(vals, 2.0);
            PhaseState s = weighted_gadget_fixed_point(g, sol->subset);
            CHECK(max_residual(g.graph, s) < 1e-9);
            CHECK(classify(s) == Classification::NonZero);
            CHECK(edge_angle_check(g.graph, s) == EdgeAngleClass::AllAcute);
            if (m <= 4) CHECK(stability_verdict(g.graph, s).verdict == Verdict::Stable);
        });
    }
}

TEST_CASE("build_clique_blowup matches the construction rule") {
    // cliques of size 1 reproduce the weighted gadget's topology at unit weight
    WeightedGraph blow11 = build_clique_blowup({1, 1});
    Gadget weighted11 = build_weighted_gadget({1, 1}, 2.0);
    CHECK(blow11.node_count() == 6);
    std::multiset<std::pair<int, int>> blow_edges, weighted_edges;
    for (const Edge& e : blow11.edges()) blow_edges.insert({e.i, e.j});
    for (const Edge& e : weighted11.graph.edges()) weighted_edges.insert({e.i, e.j});
    for (const Edge& e : blow11.edges()) CHECK(e.w == 1.0);

    WeightedGraph blow2 = build_clique_blowup({2});
    CHECK(blow2.node_count() == 6);
    // x(2) + y(2) + cliques(1+1) + cross(4) = 10 edges
    CHECK(blow2.edge_count() == 10);

    CHECK(build_clique_blowup({2, 1}).node_count() == 8);
    CHECK_THROWS_AS(build_clique_blowup({50000, 60000}), std::invalid_argument);
}

TEST_CASE("blowup of {1,1} is isomorphic to the unit-weight gadget shape") {
    WeightedGraph blow = build_clique_blowup({1, 1});
    // same degree sequence and edge count as the weighted gadget skeleton
    Gadget weighted = build_weighted_gadget({1, 1}, 2.0);
    std::multiset<int> blow_degrees, gadget_degrees;
    for (int i = 0; i < blow.node_count(); ++i)
        blow_degrees.insert(static_cast<int>(blow.neighbors(i).size()));
    for (int i = 0; i < weighted.graph.node_count(); ++i)
        gadget_degrees.insert(static_cast<int>(weighted.graph.neighbors(i).size()));
    CHECK(blow_degrees == gadget_degrees);
    CHECK(blow.edge_count() == weighted.graph.edge_count());
}

TEST_CASE("build_unweighted_gadget counts nodes and edges per the rule") {
    Gadget g22 = build_unweighted_gadget(2, {2, 2});
    CHECK(g22.graph.node_count() == 26);  // 2 + 12 + 12
    for (const Edge& e : g22.graph.edges()) CHECK(e.w == 1.0);
    // per group: u-C (2) + v-C (2) + internal (1) = 5, plus x-u and y-v
    CHECK(g22.graph.edge_count() == 6 + 6 + 6 * 5);

    Gadget g333 = build_unweighted_gadget(3, {3, 3, 3});
    CHECK(g333.graph.node_count() == 47);  // 2 + 18 + 27

    // each clique of size 2: one internal edge, four edges to u_i and v_i
    int internal = 0, to_uv = 0;
    const auto& clique0 = g22.desc.cliques[0];
    for (const Edge& e : g22.graph.edges()) {
        bool i_in = std::find(clique0.begin(), clique0.end(), e.i) != clique0.end();
        bool j_in = std::find(clique0.begin(), clique0.end(), e.j) != clique0.end();
        if (i_in && j_in) ++internal;
        else if (i_in || j_in) ++to_uv;
    }
    CHECK(internal == 1);
    CHECK(to_uv == 4);
}

TEST_CASE("unweighted_gadget_fixed_point reproduces the eps = 0 construction") {
    Gadget g = build_unweighted_gadget(2, {2, 2});
    PartitionResult feas = kuramoto_partition_feasible(2, {2, 2});
    REQUIRE(feas.answer == PartitionAnswer::Yes);
    PhaseState s = unweighted_gadget_fixed_point(g, feas.solution->subset, feas.solution->epsilon);

    double alpha = std::asin(2.0 / std::sqrt(5.0));
    double beta = kPi / 2.0 - alpha;
    CHECK(s[g.desc.y] == doctest::Approx(kPi).epsilon(1e-12));
    int first = feas.solution->subset.front();
    CHECK(s[g.desc.u[static_cast<std::size_t>(first)]] == doctest::Approx(alpha).epsilon(1e-12));
    CHECK(s[g.desc.cliques[static_cast<std::size_t>(first)][0]] ==
          doctest::Approx(alpha + beta).epsilon(1e-12));
    CHECK(alpha + beta == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    CHECK(max_residual(g.graph, s) < 1e-12);
    CHECK(stability_verdict(g.graph, s).verdict == Verdict::Stable);
    CHECK(classify(s) == Classification::NonZero);

    // all clique nodes share one phase by construction
    for (const auto& clique : g.desc.cliques)
        for (std::size_t k = 1; k < clique.size(); ++k)
            CHECK(s[clique[k]] == doctest::Approx(s[clique[0]]).epsilon(1e-12));
}

TEST_CASE("unweighted_gadget_fixed_point rejects bad witnesses") {
    Gadget g = build_unweighted_gadget(2, {2, 2});
    CHECK_THROWS_AS(unweighted_gadget_fixed_point(g, {0}, 0.0), InvalidWitnessError);
    CHECK_THROWS_AS(unweighted_gadget_fixed_point(g, {0, 1, 2}, 0.7), std::invalid_argument);
}

TEST_CASE("the surd term equals the trigonometric chain solution") {
    // oracle: solve sin(a) = b sin(gamma/2 - a) by bisection and compare
    for (long long b = 2; b <= 6; ++b) {
        for (int k = 0; k < 100; ++k) {
            double eps = (1.0 / 6.0) * k / 100.0;
            double gamma = 2.0 * std::acos(eps);
            auto chain = [&](double a) { return std::sin(a) - static_cast<double>(b) * std::sin(gamma / 2.0 - a); };
            double lo = 0.0, hi = gamma / 2.0;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                (chain(mid) < 0.0 ? lo : hi) = mid;
            }
            double alpha = 0.5 * (lo + hi);
            CHECK(std::sin(alpha) ==
                  doctest::Approx(kuramoto_partition_term(b, eps, true)).epsilon(1e-12));
        }
    }
}

TEST_CASE("the off-subset term solves the mirrored chain equation") {
    for (long long b = 2; b <= 6; ++b) {
        for (int k = 0; k < 40; ++k) {
            double eps = (1.0 / 6.0) * k / 40.0;
            double gamma = 2.0 * std::acos(eps);
            double alpha = std::asin(kuramoto_partition_term(b, eps, false));
            double beta = kPi - gamma / 2.0 - alpha;
            CHECK(std::sin(alpha) == doctest::Approx(b * std::sin(beta)).epsilon(1e-12));
        }
    }
}

TEST_CASE("boundary eps pushes the padded alpha to pi/2") {
    // at eps = 1/n the padded terms b = n reach sin(alpha) = 1 exactly
    for (long long n : {2LL, 3LL, 5LL}) {
        double term = kuramoto_partition_term(n, 1.0 / static_cast<double>(n), false);
        CHECK(term == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("witness extraction inverts the construction") {
    Gadget g = build_unweighted_gadget(3, {2, 2, 3});
    PartitionResult feas = kuramoto_partition_feasible(3, {2, 2, 3});
    REQUIRE(feas.answer == PartitionAnswer::Yes);
    PhaseState s = unweighted_gadget_fixed_point(g, feas.solution->subset, feas.solution->epsilon);
    UnweightedWitness w = extract_unweighted_witness(g, s);
    CHECK(w.eps == doctest::Approx(feas.solution->epsilon).epsilon(1e-9));
    CHECK(w.subset == feas.solution->subset);
}

TEST_CASE("serialize_gadget writes parseable text with role comments") {
    Gadget g = build_weighted_gadget({1, 1}, 2.0);
    std::string text = serialize_gadget(g);
    WeightedGraph parsed = WeightedGraph::parse(text);
    CHECK(parsed == g.graph);
    CHECK(text.find("# role x 0") != std::string::npos);
    CHECK(text.find("# role u 1 1") != std::string::npos);
    CHECK(text.find("# gadget weighted values=1,1") != std::string::npos);
}

TEST_CASE("verify_reduction agrees on both sides of small weighted instances") {
    ReductionReport yes = verify_reduction_weighted({1, 1}, 300, 5);
    CHECK(yes.partition.answer == PartitionAnswer::Yes);
    REQUIRE(yes.analytic.has_value());
    CHECK(yes.analytic->residual_norm < 1e-9);
    CHECK(yes.analytic->verdict == Verdict::Stable);
    CHECK(yes.analytic->classification == Classification::NonZero);
    CHECK(yes.stable_nonzero >= 1);
    CHECK(yes.consistent);

    ReductionReport no = verify_reduction_weighted({2, 1}, 300, 5);
    CHECK(no.partition.answer == PartitionAnswer::No);
    CHECK(no.stable_nonzero == 0);
    CHECK(no.consistent);
}

TEST_CASE("verify_reduction handles the unweighted yes instance") {
    ReductionReport rep = verify_reduction_unweighted(2, {2, 2}, 60, 17);
    CHECK(rep.partition.answer == PartitionAnswer::Yes);
    REQUIRE(rep.analytic.has_value());
    CHECK(rep.analytic->residual_norm < 1e-9);
    CHECK(rep.analytic->verdict == Verdict::Stable);
    CHECK(rep.consistent);
    CHECK(rep.stable_nonzero >= 1);
}

TEST_CASE("stable records on the unweighted gadget respect the clique structure") {
    Gadget g = build_unweighted_gadget(2, {2, 2});
    MultistartResult ms = multistart_search(g.graph, ModelParams::homogeneous(g.graph.node_count()), 80, 23);
    int stable_seen = 0;
    for (const auto& rec : ms.records) {
        if (rec.verdict != Verdict::Stable) continue;
        ++stable_seen;
        // clique co-phasing
        for (const auto& clique : g.desc.cliques)
            for (std::size_t k = 1; k < clique.size(); ++k)
                CHECK(std::fabs(circular_diff(rec.state[clique[k]], rec.state[clique[0]])) < 1e-6);
        // chain sine equality via the cut at each clique
        for (std::size_t i = 0; i < g.desc.cliques.size(); ++i) {
            double lhs = std::sin(circular_diff(rec.state[g.desc.v[i]], rec.state[g.desc.cliques[i][0]]));
            double rhs = std::sin(circular_diff(rec.state[g.desc.cliques[i][0]], rec.state[g.desc.u[i]]));
            CHECK(std::fabs(lhs - rhs) < 1e-6);
        }
        // a non-zero stable point keeps the padded positions split
        if (rec.classification == Classification::NonZero) {
            UnweightedWitness w = extract_unweighted_witness(g, rec.state);
            int padded_in_s = 0;
            for (int idx : w.subset)
                if (idx >= 2) ++padded_in_s;  // positions n..3n-1 carry the padding
            CHECK(padded_in_s > 0);
            CHECK(padded_in_s < 4);
        }
    }
    CHECK(stable_seen >= 1);
}

TEST_CASE("extracted witnesses from stable non-zero records satisfy the balance") {
    Gadget g = build_unweighted_gadget(2, {2, 2});
    MultistartResult ms = multistart_search(g.graph, ModelParams::homogeneous(g.graph.node_count()), 60, 29);
    std::vector<long long> padded{2, 2, 2, 2, 2, 2};
    for (const auto& rec : ms.records) {
        if (rec.verdict != Verdict::Stable || rec.classification != Classification::NonZero) continue;
        UnweightedWitness w = extract_unweighted_witness(g, rec.state);
        std::vector<char> in_s(6, 0);
        for (int idx : w.subset) in_s[static_cast<std::size_t>(idx)] = 1;
        CHECK(std::fabs(kuramoto_partition_balance(padded, in_s, w.eps)) < 1e-6);
    }
}
