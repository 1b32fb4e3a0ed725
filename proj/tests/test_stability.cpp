#include <random>

#include "doctest.h"
#include "kur/stability.hpp"
#include "oracles.hpp"

using namespace kur;

TEST_CASE("jacobian matches the closed forms on K2") {
    WeightedGraph k2(2, {{0, 1, 1.0}});
    Matrix sync = jacobian(k2, PhaseState(std::vector<double>{0.0, 0.0}));
    CHECK(sync(0, 0) == doctest::Approx(-1.0));
    CHECK(sync(0, 1) == doctest::Approx(1.0));
    CHECK(sync(1, 0) == doctest::Approx(1.0));
    CHECK(sync(1, 1) == doctest::Approx(-1.0));

    Matrix anti = jacobian(k2, PhaseState(std::vector<double>{0.0, kPi}));
    CHECK(anti(0, 0) == doctest::Approx(1.0));
    CHECK(anti(0, 1) == doctest::Approx(-1.0));
    CHECK(anti(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("jacobian of the hexagon twist is the cos(pi/3) circulant") {
    WeightedGraph hexagon = oracles::ring_graph(6);
    Matrix m = jacobian(hexagon, oracles::ring_twist(6, 1));
    for (int i = 0; i < 6; ++i) {
        CHECK(m(i, i) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(m(i, (i + 1) % 6) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(m(i, (i + 5) % 6) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("jacobian rows sum to zero") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        WeightedGraph g = oracles::random_connected_graph(rng, n);
        Matrix m = jacobian(g, oracles::random_state(rng, n));
        for (int i = 0; i < n; ++i) {
            double sum = 0.0;
            for (int j = 0; j < n; ++j) sum += m(i, j);
            CHECK(std::fabs(sum) < 1e-12);
        }
    }
}

TEST_CASE("eigen_symmetric on the stated examples") {
    Matrix a(2, 2);
    a(0, 0) = -1.0; a(0, 1) = 1.0; a(1, 0) = 1.0; a(1, 1) = -1.0;
    auto ev = eigen_symmetric(a);
    CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));

    Matrix d(3, 3, 0.0);
    d(0, 0) = 3.0; d(1, 1) = 1.0; d(2, 2) = 2.0;
    auto dv = eigen_symmetric(d);
    CHECK(dv[0] == doctest::Approx(1.0));
    CHECK(dv[1] == doctest::Approx(2.0));
    CHECK(dv[2] == doctest::Approx(3.0));

    Matrix bad(2, 2, 0.0);
    bad(0, 1) = 1.0;  // not symmetric
    CHECK_THROWS_AS(eigen_symmetric(bad), std::invalid_argument);
}

TEST_CASE("hexagon twist spectrum matches the circulant formula") {
    WeightedGraph hexagon = oracles::ring_graph(6);
    auto ev = eigen_symmetric(jacobian(hexagon, oracles::ring_twist(6, 1)));
    // oracle: eigenvalues of the circulant are cos(pi q / 3) - 1, q = 0..5
    std::vector<double> expected;
    for (int q = 0; q < 6; ++q) expected.push_back(std::cos(kPi * q / 3.0) - 1.0);
    std::sort(expected.begin(), expected.end());
    REQUIRE(ev.size() == expected.size());
    for (std::size_t i = 0; i < ev.size(); ++i)
        CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

TEST_CASE("eigenvalues reproduce trace and Frobenius norm on random symmetric matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int round = 0; round < 25; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);
        Matrix a(n, n, 0.0);
        double trace = 0.0, fro2 = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = entry(rng);
                a(i, j) = a(j, i) = v;
            }
        for (int i = 0; i < n; ++i) {
            trace += a(i, i);
            for (int j = 0; j < n; ++j) fro2 += a(i, j) * a(i, j);
        }
        auto ev = eigen_symmetric(a);
        double ev_sum = 0.0, ev_sq = 0.0;
        for (double v : ev) {
            ev_sum += v;
            ev_sq += v * v;
        }
        CHECK(ev_sum == doctest::Approx(trace).epsilon(1e-9));
        CHECK(ev_sq == doctest::Approx(fro2).epsilon(1e-9));
    }
}

TEST_CASE("stability_verdict on the stated examples") {
    WeightedGraph k2(2, {{0, 1, 1.0}});
    CHECK(stability_verdict(k2, PhaseState(std::vector<double>{0.0, 0.0})).verdict == Verdict::Stable);
    CHECK(stability_verdict(k2, PhaseState(std::vector<double>{0.0, kPi})).verdict == Verdict::Unstable);

    WeightedGraph hexagon = oracles::ring_graph(6);
    StabilityReport rep = stability_verdict(hexagon, oracles::ring_twist(6, 1));
    CHECK(rep.verdict == Verdict::Stable);
    CHECK(rep.zero_mode_count == 1);

    // cos(pi/2) = 0 wipes out the K2 coupling entirely: marginal
    CHECK(stability_verdict(k2, PhaseState(std::vector<double>{0.0, kPi / 2.0})).verdict ==
          Verdict::Marginal);

    WeightedGraph disconnected(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(stability_verdict(disconnected, PhaseState(std::vector<double>{0.0, 0.0, 0.0})),
                    std::invalid_argument);

    WeightedGraph single(1, {});
    CHECK(stability_verdict(single, PhaseState(std::vector<double>{0.4})).verdict == Verdict::Stable);
}

TEST_CASE("zero mode is always present") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        WeightedGraph g = oracles::random_connected_graph(rng, n);
        StabilityReport rep = stability_verdict(g, oracles::random_state(rng, n));
        CHECK(rep.zero_mode_count >= 1);
        CHECK(std::fabs(rep.spectrum.back()) >= -1e-12);  // largest is never below the zero mode
    }
}

TEST_CASE("cut_check on the stated examples") {
    WeightedGraph hexagon = oracles::ring_graph(6);
    PhaseState twist = oracles::ring_twist(6, 1);
    CutSums single = cut_check(hexagon, twist, {0});
    CHECK(std::fabs(single.sin_sum) < 1e-15);
    CHECK(single.cos_sum == doctest::Approx(1.0).epsilon(1e-12));

    WeightedGraph k2(2, {{0, 1, 1.0}});
    CutSums anti = cut_check(k2, PhaseState(std::vector<double>{0.0, kPi}), {0});
    CHECK(std::fabs(anti.sin_sum) < 1e-15);
    CHECK(anti.cos_sum == doctest::Approx(-1.0));

    // all-equal state: sin side cancels, cos side is the full cut weight
    WeightedGraph g(4, {{0, 1, 2.0}, {0, 2, 1.0}, {1, 3, 0.5}, {2, 3, 1.5}});
    CutSums eq = cut_check(g, PhaseState(std::vector<double>{1.0, 1.0, 1.0, 1.0}), {0, 3});
    CHECK(eq.sin_sum == 0.0);
    CHECK(eq.cos_sum == doctest::Approx(2.0 + 1.0 + 0.5 + 1.5));

    CHECK_THROWS_AS(cut_check(k2, PhaseState(std::vector<double>{0.0, 0.0}), {}), std::invalid_argument);
    CHECK_THROWS_AS(cut_check(k2, PhaseState(std::vector<double>{0.0, 0.0}), {0, 1}), std::invalid_argument);
}

TEST_CASE("edge_angle_check classifies the stated examples") {
    WeightedGraph hexagon = oracles::ring_graph(6);
    CHECK(edge_angle_check(hexagon, oracles::ring_twist(6, 1)) == EdgeAngleClass::AllAcute);

    WeightedGraph k2(2, {{0, 1, 1.0}});
    CHECK(edge_angle_check(k2, PhaseState(std::vector<double>{0.0, kPi})) == EdgeAngleClass::AllObtuse);

    WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    CHECK(edge_angle_check(path, PhaseState(std::vector<double>{0.0, kPi / 4.0, kPi})) ==
          EdgeAngleClass::Mixed);
}

TEST_CASE("jacobian equals the Hessian of minus energy in the homogeneous case") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 8; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        WeightedGraph g = oracles::random_connected_graph(rng, n);
        PhaseState s = oracles::random_state(rng, n);
        Matrix analytic = jacobian(g, s);
        Matrix fd = oracles::fd_neg_energy_hessian(g, s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(std::fabs(analytic(i, j) - fd(i, j)) < 1e-6);
        auto ev_a = eigen_symmetric(analytic);
        auto ev_f = eigen_symmetric(fd);
        for (std::size_t i = 0; i < ev_a.size(); ++i) CHECK(std::fabs(ev_a[i] - ev_f[i]) < 1e-6);
    }
}
