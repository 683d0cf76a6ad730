#include <gtest/gtest.h>

#include <cmath>

#include "springfold/oracle.hpp"

using namespace springfold;

TEST(Degree4VertexTest, Validation) {
    EXPECT_NO_THROW(Degree4Vertex({kPi / 2, kPi / 2, kPi / 2, kPi / 2}));
    EXPECT_THROW(Degree4Vertex({kPi / 2, kPi / 2, kPi / 2, kPi / 3}), std::domain_error);
    EXPECT_THROW(Degree4Vertex({0.0, kPi, kPi / 2, kPi / 2}), std::domain_error);
}

TEST(VertexLoopClosure, FlatStateStaysFlat) {
    const Degree4Vertex v({kPi / 2, kPi / 2, kPi / 2, kPi / 2});
    const auto sol = vertex_loop_closure(v, 0.0, 0);
    for (double r : sol.rho) EXPECT_EQ(r, 0.0);
}

TEST(VertexLoopClosure, ReverseFoldVertexMatchesClosedForm) {
    const double phi0 = 3 * kPi / 4;
    const double xi = kPi / 2;
    const auto vertex = reverse_fold_vertex(phi0);
    const auto sol = vertex_loop_closure(vertex, kPi - xi, 0);
    EXPECT_LE(sol.residual, 1e-10);
    // Reversal branch: the opposite pleat crease folds with the opposite sign.
    EXPECT_NEAR(sol.rho[2], -(kPi - xi), 1e-9);
    // Isotropic vertex: equal side fold angles.
    EXPECT_NEAR(sol.rho[1], sol.rho[3], 1e-9);
    EXPECT_NEAR(oracle_reverse_fold_phi(xi, phi0), reverse_fold_angle(xi, phi0), 1e-9);
}

TEST(VertexLoopClosure, BirdBaseAntisymmetricResponse) {
    const Degree4Vertex v({kPi / 2, kPi / 2, kPi / 2, kPi / 2});
    const double delta = 0.4;
    const auto pos = vertex_loop_closure(v, delta, 0);
    const auto neg = vertex_loop_closure(v, -delta, 0);
    EXPECT_LE(pos.residual, 1e-10);
    EXPECT_LE(neg.residual, 1e-10);
    EXPECT_NEAR(pos.rho[2], -neg.rho[2], 1e-9);
    EXPECT_NEAR(pos.rho[2], -delta, 1e-9);
}

TEST(VertexLoopClosure, GeneralFlatFoldableVertex) {
    const Degree4Vertex v({0.7, 1.1, kPi - 0.7, kPi - 1.1});
    const auto sol = vertex_loop_closure(v, 1.0, 0);
    EXPECT_LE(sol.residual, 1e-10);
    EXPECT_NEAR(sol.rho[2], -1.0, 1e-9);
}

TEST(VertexLoopClosure, ResidualAtEverySolutionOnGrid) {
    for (double phi0 : {0.5, 1.5, 2.8}) {
        const auto vertex = reverse_fold_vertex(phi0);
        for (double driven : {0.3, 1.0, 2.0, 3.0}) {
            const auto sol = vertex_loop_closure(vertex, driven, 0);
            EXPECT_LE(sol.residual, 1e-10) << "phi0=" << phi0 << " driven=" << driven;
        }
    }
}

TEST(OracleGridTest, MatchesClosedFormOn20x20) {
    const auto grid = oracle_comparison_grid(20);
    EXPECT_EQ(grid.rows.size(), 400u);
    EXPECT_LE(grid.max_abs_err, 1e-9);
    const std::string csv = oracle_grid_to_csv(grid);
    EXPECT_EQ(csv.rfind("xi,phi0,phi_closed_form,phi_oracle,abs_err\n", 0), 0u);
}

TEST(FoldedProfile, FlatPleatTurnsOnlyAtPiFolds) {
    const SpringJointSpec joint({2.0, 2.5, 2.8});
    const std::vector<double> lengths(6, 1.0);
    const auto prof = folded_profile(joint, kPi, lengths);
    EXPECT_NEAR(prof.total_turn, -2 * kPi, 1e-12);
    ASSERT_EQ(prof.points.size(), 7u);
}

TEST(FoldedProfile, TotalTurnEqualsCompoundExactly) {
    const SpringJointSpec joint({2.0, 2.5, 2.8});
    const std::vector<double> lengths{1.0, 0.5, 1.5, 0.5, 1.0, 2.0};
    for (double xi : {0.0, 0.6, 1.5, 2.9, kPi}) {
        const auto prof = folded_profile(joint, xi, lengths);
        EXPECT_NEAR(prof.total_turn, compound_fold_angle(xi, joint), 1e-12);
    }
}

TEST(FoldedProfile, LengthPreservation) {
    const SpringJointSpec joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    const std::vector<double> lengths(8, 0.7);
    for (double xi : {0.1, 1.2, 2.4}) {
        const auto prof = folded_profile(joint, xi, lengths);
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < prof.points.size(); ++i)
            total += (prof.points[i + 1] - prof.points[i]).norm();
        EXPECT_NEAR(total, 8 * 0.7, 1e-12);
    }
}

TEST(FoldedProfile, ZeroXiFoldsBackOnItself) {
    const SpringJointSpec joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    const auto prof = folded_profile(joint, 0.0, std::vector<double>(8, 1.0));
    EXPECT_NEAR(prof.total_turn, 0.0, 1e-12);
    // pi-fold turns reverse the direction between odd segments.
    EXPECT_NEAR(prof.direction_angles[1] - prof.direction_angles[2], kPi, 1e-12);
}

TEST(FoldedProfile, CollisionBeyondHardStop) {
    const SpringJointSpec joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    const auto hard = find_hard_stop(joint);
    ASSERT_TRUE(hard.has_value());
    const std::vector<double> lengths(8, 1.0);
    const auto beyond = folded_profile(joint, std::min(kPi, *hard + 0.3), lengths);
    EXPECT_TRUE(beyond.collided);
}

TEST(FoldedProfile, RejectsBadSegmentCounts) {
    const SpringJointSpec joint({2.0, 2.5});
    EXPECT_THROW(folded_profile(joint, 1.0, {1.0, 1.0, 1.0}), std::domain_error);
    EXPECT_THROW(folded_profile(joint, 1.0, {1.0, 1.0, 1.0, -1.0}), std::domain_error);
}
