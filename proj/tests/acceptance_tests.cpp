// Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
// Criterion 5 documents a known analytic gap: the n = 64 equal-angle joint
// deviates from the envelope by (eps^3/12 n^2)(sec^3 - sec)(xi/2), which
// reaches ~2.26e-3 at xi = 2.5 against the stated 1e-3 bound. The assertion
// is kept as stated and the measured value is printed.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "springfold/springfold.hpp"

using namespace springfold;

namespace {

struct CriterionLine {
    int id;
    std::string what;
    bool failed_before;
    explicit CriterionLine(int criterion, std::string description)
        : id(criterion), what(std::move(description)) {
        failed_before = ::testing::Test::HasFailure();
    }
    ~CriterionLine() {
        const bool ok = !::testing::Test::HasFailure() || failed_before;
        std::printf("[criterion %2d] %s — %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
        std::fflush(stdout);
    }
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

struct SweepCase {
    std::string name;
    CreasePattern cp;
    bool tilted = false;
};

const std::vector<SweepCase>& sweep_cases() {
    static const std::vector<SweepCase> cases = [] {
        std::vector<SweepCase> out;
        auto straight = [&](const std::string& name, const SpringJointSpec& joint, double W,
                            double w) {
            StraightJointParams p;
            p.joint = joint;
            p.strip_width = W;
            p.pleat_width = w;
            out.push_back({"straight/" + name, gen_straight_spring_joint(p), false});
        };
        straight("fig3", SpringJointSpec::equal(4, 3 * kPi / 4), 4.0, 1.0);
        straight("single", SpringJointSpec({kPi / 2}), 2.0, 1.0);
        straight("unequal", SpringJointSpec({2.0, 2.5, 2.8}), 3.0, 1.0);
        straight("miura-joint", SpringJointSpec::equal(4, 23 * kPi / 24), 4.0, 1.0);
        straight("mixed", SpringJointSpec({kPi / 3, kPi / 2, 2 * kPi / 3}), 5.0, 1.0);

        auto tilted = [&](const std::string& name, double d, double l, std::size_t n) {
            TiltedJointParams p;
            p.d = d;
            p.l = l;
            p.n = n;
            p.pleat_width = 1.0;
            out.push_back({"tilted/" + name, gen_tilted_spring_joint(p), true});
        };
        tilted("n2", 0.5, 1.0, 2);
        tilted("n3", 0.4, 1.0, 3);
        tilted("n4", 0.3, 1.0, 4);
        tilted("n2-wide", 1.0, 1.0, 2);
        tilted("n5", 0.2, 1.0, 5);

        auto miura = [&](const std::string& name, std::size_t rows, std::size_t cols,
                         const SpringJointSpec& joint, double ph) {
            MiuraSubstitutionSpec s;
            s.rows = rows;
            s.cols = cols;
            s.panel_width = 1.0;
            s.panel_height = ph;
            s.joint = joint;
            out.push_back({"miura/" + name, gen_miura_with_spring_joints(s), false});
        };
        miura("unit", 1, 1, SpringJointSpec({2.0}), 1.0);
        miura("fig3", 2, 3, SpringJointSpec::equal(4, 3 * kPi / 4), 2.5);
        miura("fig8", 3, 3, SpringJointSpec::equal(4, 23 * kPi / 24), 1.5);
        miura("dual", 2, 2, SpringJointSpec({2.0, 2.5}), 2.0);
        miura("wide", 1, 2, SpringJointSpec::equal(4, 23 * kPi / 24), 1.2);

        auto modular = [&](const std::string& name, const SpringJointSpec& joint, bool tilt) {
            const auto result = tilt ? gen_tilted_modular_units(joint, 2.0, 1.0)
                                     : gen_modular_units(joint, 2.0, 1.0);
            out.push_back({"modular/" + name, result.layout, false});
        };
        modular("fig7", SpringJointSpec::equal(4, 3 * kPi / 4), false);
        modular("single", SpringJointSpec({kPi / 2}), false);
        modular("unequal", SpringJointSpec({2.0, 2.5, 2.8}), false);
        modular("tilt-fig", SpringJointSpec::equal(4, 3 * kPi / 4), true);
        modular("tilt-dual", SpringJointSpec({2.0, 2.5}), true);
        return out;
    }();
    return cases;
}

}  // namespace

TEST(Acceptance, Criterion01_Eq1Endpoints) {
    CriterionLine line(1, "Eq. 1 endpoint identities for 1000 random phi0");
    const double t0 = now_seconds();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> dist(1e-9, kPi - 1e-9);
    for (int i = 0; i < 1000; ++i) {
        const double phi0 = dist(rng);
        EXPECT_LE(std::fabs(reverse_fold_angle(0.0, phi0) - phi0), 1e-12);
        EXPECT_LE(std::fabs(reverse_fold_angle(kPi, phi0)), 1e-12);
    }
    EXPECT_LT(now_seconds() - t0, 1.0);
}

TEST(Acceptance, Criterion02_PiFoldConstancy) {
    CriterionLine line(2, "pi-fold constancy: phi(xi, pi) == pi exactly for 1000 random xi");
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> dist(0.0, kPi);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(reverse_fold_angle(dist(rng), kPi), kPi);
}

TEST(Acceptance, Criterion03_OracleEquivalence) {
    CriterionLine line(3, "closed form vs loop-closure oracle, 50x50 grid, <= 1e-9");
    const double t0 = now_seconds();
    const OracleGrid grid = oracle_comparison_grid(50);
    EXPECT_LE(grid.max_abs_err, 1e-9);
    const double dt = now_seconds() - t0;
    EXPECT_LT(dt, 30.0);
    std::printf("    max |Eq.1 - oracle| = %.3e over %zu points (%.2f s)\n", grid.max_abs_err,
                grid.rows.size(), dt);
}

TEST(Acceptance, Criterion04_DualConsistency) {
    CriterionLine line(4, "Eq. 2 dual consistency to 1e-15 on a 100-point grid");
    const SpringJointSpec dual({2.0, 23 * kPi / 24});
    for (int i = 0; i <= 100; ++i) {
        const double xi = kPi * i / 100.0;
        const double two_term = reverse_fold_angle(xi, 2.0) - kPi +
                                reverse_fold_angle(xi, 23 * kPi / 24);
        EXPECT_LE(std::fabs(compound_fold_angle(xi, dual) - two_term), 1e-15);
    }
}

TEST(Acceptance, Criterion05_EnvelopeLimit) {
    CriterionLine line(5, "envelope limit: n=64 within 1e-3 on [0, 2.5]; error halves with n");
    const double phi0_max = kPi / 2;
    auto max_err_for = [&](int n) {
        const SpringJointSpec joint =
            SpringJointSpec::equal(static_cast<std::size_t>(n), kPi - (kPi - phi0_max) / n);
        double err = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double xi = 2.5 * i / 1000.0;
            err = std::max(err, std::fabs(compound_fold_angle(xi, joint) -
                                          envelope_fold_angle(xi, phi0_max)));
        }
        return err;
    };
    double prev = 1e9;
    for (int n : {8, 16, 32, 64}) {
        const double err = max_err_for(n);
        EXPECT_LT(err, prev) << "error must decrease monotonically in n";
        std::printf("    n=%3d  max|compound - envelope| = %.6e\n", n, err);
        prev = err;
    }
    // As stated; the analytic deviation at n=64, xi=2.5 is ~2.26e-3.
    EXPECT_LE(prev, 1e-3) << "known spec-level gap: (eps^3/12 n^2)(sec^3 - sec)(1.25) = 2.26e-3";
}

TEST(Acceptance, Criterion06_Fig3dReproduction) {
    CriterionLine line(6, "Fig. 3d curve: starts at 0, strictly decreasing, -pi at hard stop");
    const SpringJointSpec joint = SpringJointSpec::equal(4, 3 * kPi / 4);
    const KinematicCurve curve = sample_curve(joint, 401);
    EXPECT_LE(std::fabs(curve.samples.front().second), 1e-12);
    EXPECT_NEAR(curve.samples.back().second, -3 * kPi, 1e-12);
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
        EXPECT_LT(curve.samples[i].second, curve.samples[i - 1].second);
    const auto hard = find_hard_stop(joint);
    ASSERT_TRUE(hard.has_value());
    EXPECT_LE(std::fabs(compound_fold_angle(*hard, joint) + kPi), 1e-10);
    const std::string csv = curve_to_csv(curve);
    EXPECT_EQ(csv.rfind("xi,phi\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 402);
}

TEST(Acceptance, Criterion07_MiuraSubstitutionAnalysis) {
    CriterionLine line(7, "Miura joint: phi = 0 crossing matches the closed form; hard stop after");
    const SpringJointSpec joint = SpringJointSpec::equal(4, 23 * kPi / 24);
    const double closed_form = 2.0 * std::acos(std::tan(3 * kPi / 8) / std::tan(23 * kPi / 48));
    const double zero_at = invert_dihedral(0.0, joint);
    EXPECT_LE(std::fabs(zero_at - closed_form), 1e-10);
    const auto hard = find_hard_stop(joint);
    ASSERT_TRUE(hard.has_value());
    EXPECT_GT(*hard, zero_at);
    std::printf(
        "    equal-angle realization: phi=0 at xi=%.6f, hard stop at xi=%.6f\n"
        "    reference: the paper reports 2.495 and 2.878 for its prototype; its four\n"
        "    constituent angles are not published, so the equal-angle crossings differ.\n",
        zero_at, *hard);
}

TEST(Acceptance, Criterion08_InverseDesignRoundTrip) {
    CriterionLine line(8, "inverse design round trip: 100 random joints, residual <= 1e-6");
    const double t0 = now_seconds();
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> angle_dist(0.3, kPi - 0.05);
    std::uniform_real_distribution<double> xi_dist(0.05, kPi - 0.05);
    int converged = 0;
    for (int t = 0; t < 100; ++t) {
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
        const DesignSolution sol = solve_waypoints(p);
        double max_res = 0.0;
        for (double r : sol.residuals) max_res = std::max(max_res, std::fabs(r));
        EXPECT_LE(max_res, 1e-6) << "case " << t;
        if (sol.converged && sol.iterations <= 200) ++converged;
    }
    EXPECT_GE(converged, 95);
    const double dt = now_seconds() - t0;
    EXPECT_LT(dt, 10.0);
    std::printf("    %d/100 converged within 200 iterations (%.2f s)\n", converged, dt);
}

TEST(Acceptance, Criterion09_GeneratedPatternValidity) {
    CriterionLine line(9, "20-case sweep: flat-foldable at 1e-9, fold map cycle-consistent");
    const auto& cases = sweep_cases();
    ASSERT_EQ(cases.size(), 20u);
    for (const auto& c : cases) {
        const auto report = validate_flat_foldable(c.cp, 1e-9);
        EXPECT_TRUE(report.all_pass) << c.name;
        EXPECT_NO_THROW(flat_fold_map(c.cp)) << c.name;
    }
}

TEST(Acceptance, Criterion10_TiltedParallelism) {
    CriterionLine line(10, "tilted sweep: input and output pleat directions parallel <= 1e-9");
    for (const auto& c : sweep_cases()) {
        if (!c.tilted) continue;
        double max_y = 0.0;
        for (const auto& v : c.cp.vertices) max_y = std::max(max_y, v.y);
        double in_x = 0.0, in_y = 0.0, out_x = 0.0, out_y = 0.0;
        for (const auto& cr : c.cp.creases) {
            if (cr.assignment != CreaseAssignment::Mountain &&
                cr.assignment != CreaseAssignment::Valley)
                continue;
            const Vec2 a = c.cp.vertices[cr.v1];
            const Vec2 b = c.cp.vertices[cr.v2];
            Vec2 d = b - a;
            if (d.y < 0) d = d * -1.0;
            const double len = d.norm();
            if (std::fabs(a.y) < 1e-9 || std::fabs(b.y) < 1e-9) {
                in_x += d.x / len;
                in_y += d.y / len;
            }
            if (std::fabs(a.y - max_y) < 1e-9 || std::fabs(b.y - max_y) < 1e-9) {
                out_x += d.x / len;
                out_y += d.y / len;
            }
        }
        const double angle =
            std::fabs(wrap_angle(std::atan2(out_y, out_x) - std::atan2(in_y, in_x)));
        EXPECT_LE(angle, 1e-9) << c.name;
    }
}

TEST(Acceptance, Criterion11_ModularEquivalence) {
    CriterionLine line(11, "modular curve == compound curve (<= 1e-12); circular limit vs Eq. 4");
    const SpringJointSpec joint({2.0, 2.5, 2.8, 3.0});
    const auto result = gen_modular_units(joint, 2.0, 1.0);
    ASSERT_EQ(result.spec.vertex_angles.size(), joint.size());
    for (std::size_t k = 0; k < joint.size(); ++k)
        EXPECT_EQ(result.spec.vertex_angles[k], joint.constituent_angles[k]);
    for (int i = 0; i <= 256; ++i) {
        const double xi = kPi * i / 256.0;
        EXPECT_LE(std::fabs(result.spec.predicted_fold_angle(xi) - compound_fold_angle(xi, joint)),
                  1e-12);
    }
    // Circular limit, same construction and bound as criterion 5.
    const double phi0_max = kPi / 2;
    const SpringJointSpec big = SpringJointSpec::equal(64, kPi - (kPi - phi0_max) / 64.0);
    const auto circle = gen_modular_units(big, 4.0, 1.0);
    double err = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double xi = 2.5 * i / 1000.0;
        err = std::max(err, std::fabs(circle.spec.predicted_fold_angle(xi) -
                                      envelope_fold_angle(xi, phi0_max)));
    }
    std::printf("    circular-limit max error vs envelope = %.6e\n", err);
    EXPECT_LE(err, 1e-3) << "same spec-level gap as criterion 5";
}

TEST(Acceptance, Criterion12_SerializationDeterminism) {
    CriterionLine line(12, "FOLD export-import-export byte-identical; SVG byte-deterministic");
    for (const auto& c : sweep_cases()) {
        const std::string once = write_fold(c.cp);
        const CreasePattern back = read_fold(once);
        const std::string twice = write_fold(back);
        EXPECT_EQ(once, twice) << c.name;
        EXPECT_EQ(write_svg(c.cp), write_svg(c.cp)) << c.name;
    }
}
