#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "springfold/design.hpp"
#include "springfold/kinematics.hpp"

using namespace springfold;

TEST(CheckFeasibility, StartAngleWaypointIsFeasible) {
    const double phi0_max = 2.0;
    const auto report = check_feasibility({{0.0, phi0_max, 1.0}}, phi0_max);
    EXPECT_TRUE(report.all_feasible);
}

TEST(CheckFeasibility, AboveEnvelopeIsInfeasible) {
    const auto report = check_feasibility({{kPi / 2, kPi, 1.0}}, kPi / 2);
    EXPECT_FALSE(report.all_feasible);
    EXPECT_FALSE(report.verdicts[0].feasible);
}

TEST(CheckFeasibility, NonMonotoneIsInfeasible) {
    const auto report = check_feasibility({{1.0, -1.0, 1.0}, {2.0, -0.5, 1.0}}, kPi);
    EXPECT_FALSE(report.all_feasible);
    EXPECT_TRUE(report.verdicts[0].feasible);
    EXPECT_FALSE(report.verdicts[1].feasible);
}

TEST(CheckFeasibility, DuplicateXiRejected) {
    EXPECT_THROW(check_feasibility({{1.0, 0.5, 1.0}, {1.0, 0.4, 1.0}}, kPi), std::domain_error);
}

TEST(SolveWaypoints, SingleWaypointSingleFold) {
    DesignProblem p;
    p.waypoints = {{0.0, 2.1, 1.0}};
    p.n = 1;
    const auto sol = solve_waypoints(p);
    EXPECT_TRUE(sol.converged);
    ASSERT_EQ(sol.joint.size(), 1u);
    EXPECT_NEAR(sol.joint.constituent_angles[0], 2.1, 1e-9);
}

TEST(SolveWaypoints, RecoversKnownJointCurve) {
    const SpringJointSpec truth({2.0, 2.5, 2.8});
    DesignProblem p;
    for (double xi : {0.4, 1.3, 2.2})
        p.waypoints.push_back({xi, compound_fold_angle(xi, truth), 1.0});
    p.n = 3;
    const auto sol = solve_waypoints(p);
    for (double r : sol.residuals) EXPECT_LE(std::fabs(r), 1e-6);
}

TEST(SolveWaypoints, ConstructedTwoPointProblem) {
    const SpringJointSpec joint = SpringJointSpec::equal(4, 23 * kPi / 24);
    const double xi_star = invert_dihedral(0.0, joint);
    DesignProblem p;
    p.waypoints = {{0.0, 5 * kPi / 6, 1.0}, {xi_star, 0.0, 1.0}};
    p.n = 4;
    const auto sol = solve_waypoints(p);
    for (double r : sol.residuals) EXPECT_LE(std::fabs(r), 1e-6);
}

TEST(SolveWaypoints, InfeasibleThrows) {
    DesignProblem p;
    p.waypoints = {{0.0, kPi / 2, 1.0}, {1.0, kPi / 2 + 0.5, 1.0}};
    p.n = 3;
    EXPECT_THROW(solve_waypoints(p), infeasible_error);
}

TEST(SolveWaypoints, ConstituentsStayInsideOpenInterval) {
    const SpringJointSpec truth({0.35, 3.0});
    DesignProblem p;
    for (double xi : {0.5, 2.0})
        p.waypoints.push_back({xi, compound_fold_angle(xi, truth), 1.0});
    p.n = 2;
    const auto sol = solve_waypoints(p);
    for (double a : sol.joint.constituent_angles) {
        EXPECT_GT(a, 0.0);
        EXPECT_LT(a, kPi);
    }
}

TEST(SolveWaypoints, SolutionSortedAscending) {
    const SpringJointSpec truth({2.9, 1.2, 2.0});
    DesignProblem p;
    for (double xi : {0.3, 1.1, 2.5})
        p.waypoints.push_back({xi, compound_fold_angle(xi, truth), 1.0});
    p.n = 3;
    const auto sol = solve_waypoints(p);
    for (std::size_t i = 1; i < sol.joint.size(); ++i)
        EXPECT_LE(sol.joint.constituent_angles[i - 1], sol.joint.constituent_angles[i]);
}

TEST(SolveWaypoints, Determinism) {
    DesignProblem p;
    const SpringJointSpec truth({1.7, 2.4, 2.9, 2.2});
    for (double xi : {0.2, 0.9, 1.7, 2.6})
        p.waypoints.push_back({xi, compound_fold_angle(xi, truth), 1.0});
    p.n = 4;
    const auto a = solve_waypoints(p);
    const auto b = solve_waypoints(p);
    ASSERT_EQ(a.joint.size(), b.joint.size());
    for (std::size_t i = 0; i < a.joint.size(); ++i)
        EXPECT_EQ(a.joint.constituent_angles[i], b.joint.constituent_angles[i]);
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(SolveWaypoints, WeightScalingLeavesJointUnchanged) {
    const SpringJointSpec truth({1.9, 2.6});
    DesignProblem p;
    for (double xi : {0.5, 1.0, 1.8})
        p.waypoints.push_back({xi, compound_fold_angle(xi, truth) + (xi == 1.0 ? 0.01 : 0.0), 1.5});
    p.n = 2;
    const auto base = solve_waypoints(p);
    for (double c : {0.25, 4.0, 1024.0}) {
        DesignProblem scaled = p;
        for (auto& w : scaled.waypoints) w.weight *= c;
        const auto sol = solve_waypoints(scaled);
        for (std::size_t i = 0; i < base.joint.size(); ++i)
            EXPECT_EQ(sol.joint.constituent_angles[i], base.joint.constituent_angles[i]) << c;
    }
}

TEST(SolveWaypoints, RoundTripRandomJoints) {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> angle_dist(0.3, kPi - 0.05);
    std::uniform_real_distribution<double> xi_dist(0.05, kPi - 0.05);
    int converged = 0;
    const int cases = 100;
    for (int t = 0; t < cases; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
        std::vector<double> angles(n);
        for (auto& a : angles) a = angle_dist(rng);
        const SpringJointSpec truth(angles);

        DesignProblem p;
        p.n = n;
        while (p.waypoints.size() < n) {
            const double xi = xi_dist(rng);
            bool distinct = true;
            for (const auto& w : p.waypoints)
                if (std::fabs(w.xi - xi) < 1e-3) distinct = false;
            if (distinct) p.waypoints.push_back({xi, compound_fold_angle(xi, truth), 1.0});
        }
        const auto sol = solve_waypoints(p);
        double max_res = 0.0;
        for (double r : sol.residuals) max_res = std::max(max_res, std::fabs(r));
        EXPECT_LE(max_res, 1e-6) << "case " << t;
        if (sol.converged && sol.iterations <= 200) ++converged;
    }
    EXPECT_GE(converged, 95);
}

TEST(SolveTwoPoint, HardStopTarget) {
    const SpringJointSpec joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    const auto hard = find_hard_stop(joint);
    ASSERT_TRUE(hard.has_value());
    const auto sol = solve_two_point(0.0, -kPi, *hard, 4);
    for (double r : sol.residuals) EXPECT_LE(std::fabs(r), 1e-6);
}

TEST(SolveTwoPoint, DuplicateXiRejected) {
    EXPECT_THROW(solve_two_point(2.0, 2.0, 0.0, 3), std::domain_error);
}

TEST(SolveTwoPoint, EqualAngleClosedFormCrossing) {
    const auto sol = solve_two_point(5 * kPi / 6, 0.0, 2.8237850448938295, 4);
    for (double r : sol.residuals) EXPECT_LE(std::fabs(r), 1e-6);
}

TEST(SolveTwoPoint, RequiresAtLeastTwoFolds) {
    EXPECT_THROW(solve_two_point(2.0, 1.0, 1.5, 1), std::domain_error);
}
